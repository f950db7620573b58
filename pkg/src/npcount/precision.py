"""Working-precision plumbing for the high-precision kernel.

``HPReal``/``HPComplex`` are mpmath's arbitrary-precision ``mpf``/``mpc``;
a :class:`PrecisionContext` pins the mantissa size (in bits) that every
kernel operation works at. Internally computations run with a few guard
bits and round to the nominal precision on return, so a fixed context and
fixed inputs always produce bit-identical results.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

HPReal = mp.mpf
HPComplex = mp.mpc

#: Smallest supported working precision.
MIN_BITS = 64

#: Default working precision; resolves residue coefficients (~1e-17) to
#: several digits with a wide safety margin.
DEFAULT_BITS = 192

#: Extra mantissa bits used internally by kernel operations.
GUARD_BITS = 32


@dataclass(frozen=True)
class PrecisionContext:
    """Working mantissa precision, in bits, for all kernel arithmetic."""

    bits: int = DEFAULT_BITS

    def __post_init__(self) -> None:
        if not isinstance(self.bits, int) or isinstance(self.bits, bool):
            raise TypeError(f"bits must be an int, got {type(self.bits).__name__}")
        if self.bits < MIN_BITS:
            raise ValueError(f"bits must be >= {MIN_BITS}, got {self.bits}")

    @property
    def eps(self) -> HPReal:
        """One ulp at unit scale: 2**(1 - bits)."""
        return mp.mpf(2) ** (1 - self.bits)

    def working(self):
        """mpmath precision context at bits + guard (for internal math)."""
        return mp.workprec(self.bits + GUARD_BITS)

    def final(self):
        """mpmath precision context at the nominal bit count."""
        return mp.workprec(self.bits)

    def real(self, x) -> HPReal:
        """Parse/convert x to an HPReal rounded at this precision."""
        with self.final():
            return +mp.mpf(x)

    def complex(self, x, y=0) -> HPComplex:
        """Parse/convert to an HPComplex rounded at this precision."""
        with self.final():
            return +mp.mpc(mp.mpf(x) if isinstance(x, str) else x,
                           mp.mpf(y) if isinstance(y, str) else y)

    def round(self, v):
        """Round an mpf/mpc result to the nominal precision."""
        with self.final():
            return +v


DEFAULT_CONTEXT = PrecisionContext(DEFAULT_BITS)
