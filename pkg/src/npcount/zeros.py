"""Catalog of non-trivial zeta zeros on the critical line.

Zeros are stored by their positive imaginary part t only (the conjugate
at -t is implicit; downstream oscillation sums double real parts). A
bundled table ships the first 100 zeros to 20 decimal places as Newton
seeds, and :func:`refine_zero` polishes any seed to working precision, so
results never depend on the seed table's accuracy.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import mpmath as mp

from .precision import HPReal, PrecisionContext
from .special import zeta_with_derivative

#: After refinement, |ζ(1/2 + i t)| <= 2**(RESIDUAL_MARGIN - bits).
RESIDUAL_MARGIN = 24

MAX_NEWTON_ITERATIONS = 60


class ZeroFileError(ValueError):
    """Malformed zero table file."""


class NonConvergenceError(ArithmeticError):
    """Newton refinement failed to reach the target residual."""


@dataclass(frozen=True)
class ZetaZero:
    """A zero 1/2 + i t with t > 0; `refined` marks working-precision t."""

    t: HPReal
    refined: bool = False


def load_zeros(path) -> list[ZetaZero]:
    """Parse a zero table: one decimal t per line, '#' comments, strictly increasing."""
    text = Path(path).read_text(encoding="utf-8")
    return _parse_zero_table(text, str(path))


def bundled_zeros() -> list[ZetaZero]:
    """The packaged table of the first 100 zeros (20 decimal places)."""
    text = resources.files("npcount.data").joinpath("zeta_zeros.txt").read_text("utf-8")
    return _parse_zero_table(text, "<bundled>")


def _parse_zero_table(text: str, origin: str) -> list[ZetaZero]:
    zeros: list[ZetaZero] = []
    prev = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            with mp.workprec(256):
                t = mp.mpf(line)
        except ValueError:
            raise ZeroFileError(f"{origin}:{lineno}: not a decimal number: {line!r}") from None
        if not t > 0:
            raise ZeroFileError(f"{origin}:{lineno}: t must be positive, got {line!r}")
        if prev is not None and not t > prev:
            raise ZeroFileError(f"{origin}:{lineno}: values must be strictly increasing")
        zeros.append(ZetaZero(t=t, refined=False))
        prev = t
    return zeros


def _refine_history(t0, ctx: PrecisionContext) -> tuple[HPReal, list[HPReal]]:
    """Newton-iterate t -> t - Re[ζ / (i ζ′)] at s = 1/2 + i t; returns (t, residuals)."""
    with ctx.working():
        t = mp.mpf(t0)
        target = mp.mpf(2) ** (RESIDUAL_MARGIN - ctx.bits)
        half = mp.mpf(1) / 2
        residuals: list[HPReal] = []
        for _ in range(MAX_NEWTON_ITERATIONS):
            z, zd = zeta_with_derivative(mp.mpc(half, t), ctx)
            r = abs(z)
            residuals.append(r)
            if r <= target:
                return ctx.round(t), residuals
            t = t - mp.re(z / (mp.mpc(0, 1) * zd))
        raise NonConvergenceError(
            f"zero refinement from t0={mp.nstr(mp.mpf(t0), 12)} did not reach "
            f"|zeta| <= 2^{RESIDUAL_MARGIN - ctx.bits} in {MAX_NEWTON_ITERATIONS} iterations")


def refine_zero(t0, ctx: PrecisionContext = PrecisionContext()) -> HPReal:
    """Refine a seed t0 (accurate to ~1e-3) to |ζ(1/2 + i t)| <= 2**(24 - bits)."""
    return _refine_history(t0, ctx)[0]


def refine_catalog(zeros: Iterable[ZetaZero], ctx: PrecisionContext = PrecisionContext()) -> list[ZetaZero]:
    """Refine every unrefined zero; already-refined entries pass through."""
    out = []
    for z in zeros:
        if z.refined:
            out.append(z)
        else:
            out.append(replace(z, t=refine_zero(z.t, ctx), refined=True))
    return out


def validate_catalog(zeros: Sequence[ZetaZero]) -> None:
    """Check the strictly-increasing invariant; raises ValueError on violation."""
    for a, b in zip(zeros, zeros[1:]):
        if not b.t > a.t:
            raise ValueError(f"zero catalog not strictly increasing at t={b.t}")
