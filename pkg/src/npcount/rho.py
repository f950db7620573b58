"""The two-variable table ρ(h, d): polygons of height h and depth d, slopes in [0, 1).

Two independent routes:

* :func:`rho_recurrence_table` fills the triangle with the bilinear
  recurrence ρ(h,d) = Σ ρ(α,β) ρ(γ,γ-δ) over α+δ = h-d, β+γ = d, which
  follows from splitting a polygon at slope 1/2 and shearing both halves.
* :func:`rho_bruteforce` counts segment multisets directly (oracle scale,
  h <= 40).

Base cases: ρ(h,0) = 1 (the all-flat polygon) and ρ(h,d) = 0 for
d >= max(1, h); everything outside the triangle reads as zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .counting import SlopeRange
from .polygons import admissible_segments, count_segment_multisets

BRUTEFORCE_MAX_HEIGHT = 40

_SLOPE_PREDICATES = {
    SlopeRange.HALF_OPEN_01: lambda n, m: n < m,
    SlopeRange.CLOSED_01: lambda n, m: n <= m,
    SlopeRange.CLOSED_0_HALF: lambda n, m: 2 * n <= m,
}


@dataclass(frozen=True)
class RhoTable:
    """Triangular exact-integer table ρ(h, d) for 0 <= d <= h <= max_height."""

    max_height: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, h: int, d: int) -> int:
        """ρ(h, d) with zero-extension outside the stored triangle."""
        if h < 0 or d < 0:
            return 0
        if d == 0:
            return 1
        if d >= max(1, h):
            return 0
        if h > self.max_height:
            raise IndexError(f"h={h} beyond table height {self.max_height}")
        return self.rows[h][d]

    def row(self, h: int) -> tuple[int, ...]:
        return self.rows[h]

    def entries(self):
        """Yield (h, d, ρ(h,d)) over the whole triangle, h then d ascending."""
        for h in range(self.max_height + 1):
            for d in range(h + 1):
                yield h, d, self.rows[h][d]


def rho_recurrence_table(max_height: int) -> RhoTable:
    """Fill ρ(h, d) for 0 <= d <= h <= max_height by the bilinear recurrence.

    Rows are filled with h ascending; for 1 <= d <= h-1 the right-hand
    side only reads heights α <= h-d and γ <= d, both already complete.
    """
    if max_height < 0:
        raise ValueError("max_height must be >= 0")
    rows: list[list[int]] = []

    def lookup(h: int, d: int) -> int:
        if d < 0 or h < 0:
            return 0
        if d == 0:
            return 1
        if d >= max(1, h):
            return 0
        return rows[h][d]

    for h in range(max_height + 1):
        row = [0] * (h + 1)
        row[0] = 1
        for d in range(1, h):
            acc = 0
            hd = h - d
            for alpha in range(hd + 1):
                delta = hd - alpha
                for beta in range(d + 1):
                    left = lookup(alpha, beta)
                    if left:
                        gamma = d - beta
                        right = lookup(gamma, gamma - delta)
                        if right:
                            acc += left * right
            row[d] = acc
        rows.append(row)
    return RhoTable(max_height, tuple(tuple(r) for r in rows))


def rho_bruteforce(h: int, d: int, slope_range: SlopeRange = SlopeRange.HALF_OPEN_01) -> int:
    """ρ(h, d) by direct multiset counting. Oracle scale: h <= 40."""
    if h < 0 or d < 0:
        return 0
    if h > BRUTEFORCE_MAX_HEIGHT:
        raise ValueError(f"brute force is capped at h <= {BRUTEFORCE_MAX_HEIGHT}")
    if h == 0:
        return 1 if d == 0 else 0
    segments = admissible_segments(h, _SLOPE_PREDICATES[slope_range])
    return count_segment_multisets(segments, h, d)
