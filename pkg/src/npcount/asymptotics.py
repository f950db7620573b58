"""Asymptotic polygon counts: main term, zeta-zero oscillations, variants.

The height-n count grows like

    P(n) = (C^(1/9) K / sqrt(6π)) n^(-11/18) exp((3/2) C^(1/3) n^(2/3)),

and its logarithm oscillates around log P(n) with correction terms
2 Re(c_γ τ^(-γ)) at the saddle scale τ = C^(1/3) n^(-1/3), one conjugate
pair per non-trivial zeta zero γ = 1/2 + i t, with amplitude

    c_γ = Γ(γ) ζ(γ+1) ζ(γ-1) / ζ′(γ).

All estimates are carried in natural-log scale; linear values are derived
views. Zero sums are truncated at a fixed count k (default 25) — the
amplitudes |c_γ| fall off superexponentially in t, so the truncation tail
is bounded by the triangle inequality Σ 2|c_γ| τ^(-1/2).
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Sequence

import mpmath as mp

from .counting import totient_sieve
from .precision import GUARD_BITS, HPComplex, HPReal, PrecisionContext
from .special import complex_gamma, complex_zeta, constant_C, constant_K, zeta_derivative
from .zeros import ZetaZero, bundled_zeros, refine_zero

#: Default number of zeros kept in oscillation sums.
DEFAULT_ZERO_COUNT = 25


class TruncationError(ArithmeticError):
    """A series failed to reach its truncation threshold."""


class Variant(enum.Enum):
    """Closed forms beyond the base [0, 1) count."""

    CLOSED_01 = "closed"      # slopes in [0, 1]
    SYMMETRIC = "symmetric"   # symmetric polygons, via the [0, 1/2] count


@dataclass(frozen=True)
class ResidueCoefficient:
    """Oscillation amplitude c_γ attached to one zero."""

    zero: ZetaZero
    c: HPComplex


@dataclass(frozen=True)
class AsymptoticBreakdown:
    """log-scale estimate split into main term and zero oscillation."""

    n: int
    tau: HPReal
    log_main: HPReal
    oscillation: HPReal
    k_zeros: int
    ctx: PrecisionContext

    @property
    def log_estimate(self) -> HPReal:
        with self.ctx.final():
            return +(self.log_main + self.oscillation)

    @property
    def estimate(self) -> HPReal:
        """Linear-scale view (mpf exponents are unbounded, so no overflow)."""
        with self.ctx.working():
            return self.ctx.round(mp.exp(self.log_main + self.oscillation))


# ---------------------------------------------------------------------------
# saddle scale and main term
# ---------------------------------------------------------------------------


def saddle_tau(n: int, ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """τ(n) = C^(1/3) n^(-1/3), where the tilted mean height equals n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    C = constant_C(ctx)
    with ctx.working():
        return ctx.round(mp.cbrt(C / n))


def log_leading_estimate(n: int, ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """log P(n), the non-oscillatory main term in natural log."""
    if n < 1:
        raise ValueError("n must be >= 1")
    C = constant_C(ctx)
    K = constant_K(ctx)
    with ctx.working():
        nn = mp.mpf(n)
        val = (mp.log(C) / 9 + mp.log(K) - mp.log(6 * mp.pi) / 2
               - mp.mpf(11) / 18 * mp.log(nn)
               + mp.mpf(3) / 2 * mp.cbrt(C) * nn ** (mp.mpf(2) / 3))
        return ctx.round(val)


def leading_estimate(n: int, ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """P(n) on the linear scale."""
    with ctx.working():
        return ctx.round(mp.exp(log_leading_estimate(n, ctx)))


# ---------------------------------------------------------------------------
# residue coefficients and oscillation sums
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _refined_t(t_seed: HPReal, bits: int) -> HPReal:
    return refine_zero(t_seed, PrecisionContext(bits))


@functools.lru_cache(maxsize=4096)
def _coefficient(t: HPReal, bits: int) -> HPComplex:
    ctx = PrecisionContext(bits)
    with ctx.working():
        gamma = mp.mpc(mp.mpf(1) / 2, t)
        c = (complex_gamma(gamma, ctx) * complex_zeta(gamma + 1, ctx)
             * complex_zeta(gamma - 1, ctx) / zeta_derivative(gamma, ctx))
        return ctx.round(c)


def residue_coefficient(zero: ZetaZero, ctx: PrecisionContext = PrecisionContext()) -> ResidueCoefficient:
    """c_γ = Γ(γ) ζ(γ+1) ζ(γ-1) / ζ′(γ) at γ = 1/2 + i t. Requires a refined zero."""
    if not zero.refined:
        raise ValueError("zero must be refined before computing its coefficient")
    return ResidueCoefficient(zero, _coefficient(zero.t, ctx.bits))


def _coefficients(zeros: Sequence[ZetaZero], k: int, ctx: PrecisionContext) -> list[HPComplex]:
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > len(zeros):
        raise ValueError(f"k={k} exceeds catalog size {len(zeros)}")
    out = []
    for z in zeros[:k]:
        t = z.t if z.refined else _refined_t(z.t, ctx.bits)
        out.append(_coefficient(t, ctx.bits))
    return out


def _oscillation_at_tau(tau: HPReal, coeffs: Sequence[HPComplex],
                        ts: Sequence[HPReal]) -> HPReal:
    """Σ 2 Re(c τ^(-γ)) with τ^(-γ) = exp(-γ log τ), log τ real. Exactly real."""
    logtau = mp.log(tau)
    acc = mp.mpf(0)
    for c, t in zip(coeffs, ts):
        gamma = mp.mpc(mp.mpf(1) / 2, t)
        acc += 2 * mp.re(c * mp.exp(-gamma * logtau))
    return acc


def oscillation_sum(n: int, zeros: Sequence[ZetaZero], k: int = DEFAULT_ZERO_COUNT,
                    ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """Oscillatory correction Σ over the first k zeros of 2 Re(c_γ τ(n)^(-γ))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = _coefficients(zeros, k, ctx)
    with ctx.working():
        tau = mp.cbrt(constant_C(ctx) / n)
        ts = [z.t if z.refined else _refined_t(z.t, ctx.bits) for z in zeros[:k]]
        return ctx.round(_oscillation_at_tau(tau, coeffs, ts))


def oscillation_tail_bound(n: int, zeros: Sequence[ZetaZero], start: int, stop: int,
                           ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """Triangle-inequality bound Σ_{j=start..stop-1} 2 |c_γj| τ^(-1/2)."""
    coeffs = _coefficients(zeros, stop, ctx)[start:]
    with ctx.working():
        tau = mp.cbrt(constant_C(ctx) / n)
        bound = sum((2 * abs(c) for c in coeffs), mp.mpf(0)) / mp.sqrt(tau)
        return ctx.round(bound)


def full_estimate(n: int, zeros: Sequence[ZetaZero], k: int = DEFAULT_ZERO_COUNT,
                  ctx: PrecisionContext = PrecisionContext()) -> AsymptoticBreakdown:
    """Main term plus truncated zero oscillation, as a breakdown."""
    return AsymptoticBreakdown(
        n=n,
        tau=saddle_tau(n, ctx),
        log_main=log_leading_estimate(n, ctx),
        oscillation=oscillation_sum(n, zeros, k, ctx),
        k_zeros=k,
        ctx=ctx,
    )


def variant_estimate(variant: Variant, n: int, zeros: Sequence[ZetaZero],
                     k: int = DEFAULT_ZERO_COUNT,
                     ctx: PrecisionContext = PrecisionContext(),
                     doubled: bool = False) -> HPReal:
    """log-scale closed-form estimate for a variant count.

    CLOSED_01: slopes in [0, 1] — prefactor K C^(-2/9)/sqrt(6π), exponent
    n^(-5/18), same saddle τ and full-weight oscillation.

    SYMMETRIC: the [0, 1/2] count at g = n — prefactor
    K^(1/2) C^(-7/36)/sqrt(6π), argument 2n, half-weight oscillation at
    τ = C^(1/3) (2n)^(-1/3). With doubled=True adds log 2, matching the
    symmetric-polygon total ~ 2 N_[0,1/2](g).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if doubled and variant is not Variant.SYMMETRIC:
        raise ValueError("doubled only applies to the symmetric variant")
    C = constant_C(ctx)
    K = constant_K(ctx)
    coeffs = _coefficients(zeros, k, ctx)
    with ctx.working():
        ts = [z.t if z.refined else _refined_t(z.t, ctx.bits) for z in zeros[:k]]
        if variant is Variant.CLOSED_01:
            nn = mp.mpf(n)
            tau = mp.cbrt(C / nn)
            val = (mp.log(K) - mp.mpf(2) / 9 * mp.log(C) - mp.log(6 * mp.pi) / 2
                   - mp.mpf(5) / 18 * mp.log(nn)
                   + mp.mpf(3) / 2 * mp.cbrt(C) * nn ** (mp.mpf(2) / 3)
                   + _oscillation_at_tau(tau, coeffs, ts))
        elif variant is Variant.SYMMETRIC:
            n2 = mp.mpf(2 * n)
            tau = mp.cbrt(C / n2)
            val = (mp.log(K) / 2 - mp.mpf(7) / 36 * mp.log(C) - mp.log(6 * mp.pi) / 2
                   - mp.mpf(11) / 36 * mp.log(n2)
                   + mp.mpf(3) / 4 * mp.cbrt(C) * n2 ** (mp.mpf(2) / 3)
                   + _oscillation_at_tau(tau, coeffs, ts) / 2)
            if doubled:
                val += mp.log(2)
        else:  # pragma: no cover
            raise ValueError(f"unknown variant {variant!r}")
        return ctx.round(val)


# ---------------------------------------------------------------------------
# the first-zero wave (Figure-2 style data)
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _first_zero(bits: int) -> tuple[HPReal, HPComplex]:
    """(t1, c_γ1) for the first zero, refined at the given precision."""
    seed = bundled_zeros()[0].t
    t1 = _refined_t(seed, bits)
    return t1, _coefficient(t1, bits)


def wave_sample(x, ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """First-zero wave y(x) = exp(2 Re(c_γ1 C^(-γ1/3) x^(γ1/3))), x > 0."""
    t1, c1 = _first_zero(ctx.bits)
    C = constant_C(ctx)
    with ctx.working():
        xx = mp.mpf(x)
        if not xx > 0:
            raise ValueError("x must be positive")
        gamma3 = mp.mpc(mp.mpf(1) / 2, t1) / 3
        val = mp.exp(2 * mp.re(c1 * mp.power(C, -gamma3) * mp.power(xx, gamma3)))
        return ctx.round(val)


def wave_envelope(x, ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """Amplitude bound: |log y(x)| <= 2 |c_γ1| |C^(-γ1/3)| x^(1/6)."""
    t1, c1 = _first_zero(ctx.bits)
    C = constant_C(ctx)
    with ctx.working():
        xx = mp.mpf(x)
        if not xx > 0:
            raise ValueError("x must be positive")
        gamma3 = mp.mpc(mp.mpf(1) / 2, t1) / 3
        val = 2 * abs(c1) * abs(mp.power(C, -gamma3)) * xx ** (mp.mpf(1) / 6)
        return ctx.round(val)


def first_zero_log_period() -> float:
    """Spacing 6π/t1 of adjacent wave maxima in log x (double precision)."""
    seed = bundled_zeros()[0].t
    return float(6 * mp.pi / seed)


# ---------------------------------------------------------------------------
# expansion check for log f(e^(-τ))
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionCheck:
    """Direct series vs. residue expansion of log f(e^(-τ))."""

    tau: HPReal
    direct: HPReal
    expansion: HPReal
    residual: HPReal
    terms: int


#: Hard cap on direct-sum length before giving up.
_DIRECT_SUM_MAX_TERMS = 5_000_000


def logf_expansion_check(tau, zeros: Sequence[ZetaZero] = (), k: int = 0,
                         ctx: PrecisionContext = PrecisionContext()) -> ExpansionCheck:
    """Compare log f(e^(-τ)) computed two ways, for 0 < τ <= 1.

    direct:    Σ_n φ(n) Σ_j e^(-jnτ)/j, truncated below 2^(-bits-guard);
    expansion: (C/2) τ^(-2) + Σ_γ 2 Re(c_γ τ^(-γ)) - (1/6) log τ + log K
               (the τ^(-2) residue, the zero oscillation, and the
               double-pole residue at 0);
    residual:  direct - expansion, the part the expansion drops —
               O(τ^(2-ε)) as τ -> 0.
    """
    coeffs = _coefficients(zeros, k, ctx)
    C = constant_C(ctx)
    K = constant_K(ctx)
    with ctx.working():
        tau = mp.mpf(tau)
        if not 0 < tau <= 1:
            raise ValueError("tau must be in (0, 1]")
        cutoff = mp.mpf(2) ** (-(ctx.bits + GUARD_BITS))
        x = mp.exp(-tau)

        direct = mp.mpf(0)
        # grow the totient table geometrically until the tail bound dies out
        est = int((ctx.bits + GUARD_BITS + 24) * mp.log(2) / tau) + 64
        phi = totient_sieve(min(est, _DIRECT_SUM_MAX_TERMS))
        invx1 = 1 / (1 - x)
        n = 1
        xn = x
        while True:
            inner = mp.mpf(0)
            xnj = xn
            j = 1
            inner_cut = cutoff / (phi[n] + 1)
            while xnj / j >= inner_cut:
                inner += xnj / j
                xnj *= xn
                j += 1
            direct += phi[n] * inner
            n += 1
            xn *= x
            # tail over m >= n: sum phi(m) x^m/(1-x^m) <= (x^n/(1-x)) (n/(1-x) + x/(1-x)^2)
            if xn * invx1 * (n * invx1 + x * invx1 * invx1) < cutoff:
                break
            if n >= len(phi):
                if len(phi) - 1 >= _DIRECT_SUM_MAX_TERMS:
                    raise TruncationError(
                        f"direct sum did not converge within {_DIRECT_SUM_MAX_TERMS} terms")
                phi = totient_sieve(min(2 * (len(phi) - 1), _DIRECT_SUM_MAX_TERMS))

        ts = [z.t if z.refined else _refined_t(z.t, ctx.bits) for z in zeros[:k]]
        expansion = (C / 2 / tau ** 2
                     + _oscillation_at_tau(tau, coeffs, ts)
                     - mp.log(tau) / 6 + mp.log(K))
        return ExpansionCheck(
            tau=ctx.round(tau),
            direct=ctx.round(direct),
            expansion=ctx.round(expansion),
            residual=ctx.round(direct - expansion),
            terms=n - 1,
        )
