"""Integer roots, perfect-power tests, and the quartic filter over Pell solutions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .pell_core import iter_pairs

# Squares modulo 64, 63 and 65. A square must be a residue for every modulus,
# which rejects about 99% of non-squares before any root extraction.
_QR64 = frozenset(i * i % 64 for i in range(64))
_QR63 = frozenset(i * i % 63 for i in range(63))
_QR65 = frozenset(i * i % 65 for i in range(65))


def isqrt(m: int) -> int:
    """Largest ``r`` with ``r*r <= m``.

    Newton's iteration started above the root from the bit length of ``m``;
    the iterates then decrease monotonically until they stop at the floor.
    """
    if m < 0:
        raise ValueError("isqrt of a negative number")
    if m < 2:
        return m
    x = 1 << ((m.bit_length() + 1) >> 1)
    while True:
        y = (x + m // x) >> 1
        if y >= x:
            return x
        x = y


def _maybe_square(m: int) -> bool:
    return m % 64 in _QR64 and m % 63 in _QR63 and m % 65 in _QR65


def is_perfect_square(m: int, prefilter: bool = False) -> Optional[int]:
    """Return ``r >= 0`` with ``r*r == m``, or None (always None for negative ``m``)."""
    if m < 0:
        return None
    if prefilter and not _maybe_square(m):
        return None
    r = isqrt(m)
    return r if r * r == m else None


def iroot(m: int, k: int) -> int:
    """Largest ``r`` with ``r**k <= m``."""
    if k < 1:
        raise ValueError("root degree must be >= 1")
    if m < 0:
        raise ValueError("root of a negative number")
    if k == 1 or m < 2:
        return m
    if k == 2:
        return isqrt(m)
    # 2**ceil(bits/k) is an upper bound for the root
    x = 1 << -(-m.bit_length() // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def nth_root(m: int, k: int, prefilter: bool = False) -> Optional[int]:
    """Exact ``k``-th root of ``m`` if it exists, else None."""
    if k < 1:
        raise ValueError("root degree must be >= 1")
    if m < 0:
        raise ValueError("nth_root of a negative number")
    if k % 2 == 0 and prefilter and not _maybe_square(m):
        return None
    r = iroot(m, k)
    return r if r**k == m else None


@dataclass(frozen=True)
class QuarticSolution:
    x: int
    y: int
    n: int
    eps: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise ValueError("quartic solutions are stored with nonnegative components")

    def satisfies(self) -> bool:
        return self.x * self.x == 2 * self.y**4 - 1


def search_quartic(max_n: int, prefilter: bool = False) -> List[QuarticSolution]:
    """Solutions of x^2 = 2y^4 - 1 among Pell indices ``0..max_n`` of both branches.

    ``|t_n|`` is tested for being a square ``y^2``; hits are reported once per
    distinct ``(x, y)``, keeping the smallest index (``eps = +1`` first).
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    found: dict[tuple[int, int], QuarticSolution] = {}
    for eps in (1, -1):
        for p in iter_pairs(eps):
            if p.n > max_n:
                break
            y = is_perfect_square(abs(p.t), prefilter=prefilter)
            if y is None:
                continue
            key = (abs(p.x), y)
            prev = found.get(key)
            if prev is None or p.n < prev.n:
                found[key] = QuarticSolution(abs(p.x), y, p.n, eps)
    return sorted(found.values(), key=lambda s: (s.n, -s.eps, s.x, s.y))
