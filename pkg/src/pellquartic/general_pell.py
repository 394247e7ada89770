"""Solver for C*X^(2a) = D*Y^(2b) + E via the conic P*U^2 - Q*V^2 = R.

Substituting ``U = X**a`` and ``V = Y**b`` turns the equation into a
generalized Pell conic. Solutions of the conic are collected in two ways:
a bounded scan over ``V`` (base solutions) and orbits of those base
solutions under the fundamental unit of ``x^2 - P*Q*y^2 = 1``. Conic
solutions whose components are exact ``a``-th and ``b``-th powers give
solutions of the original equation.

Results are the solutions found within the given bounds. The bounded scan
plus unit orbits is not a complete enumeration of every solution class in
general.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .power_filter import is_perfect_square, isqrt, nth_root

Pair = Tuple[int, int]

DEFAULT_V_BOUND = 10**6
DEFAULT_FAMILY_COUNT = 64


@dataclass(frozen=True)
class EquationSpec:
    """``C*X^(2a) = D*Y^(2b) + E`` with ``C, D, E != 0`` and ``a, b >= 1``."""

    C: int
    a: int
    D: int
    b: int
    E: int

    def __post_init__(self):
        for name in ("C", "D", "E"):
            if getattr(self, name) == 0:
                raise ValueError(f"{name} must be nonzero")
        for name in ("a", "b"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def holds(self, X: int, Y: int) -> bool:
        return self.C * X ** (2 * self.a) == self.D * Y ** (2 * self.b) + self.E

    def is_title_equation(self) -> bool:
        return (self.C, self.a, self.D, self.b, self.E) == (1, 1, 2, 2, -1)


@dataclass(frozen=True)
class ConicForm:
    """``P*U^2 - Q*V^2 = R``."""

    P: int
    Q: int
    R: int

    def __post_init__(self):
        if 0 in (self.P, self.Q, self.R):
            raise ValueError("conic coefficients must be nonzero")

    def holds(self, u: int, v: int) -> bool:
        return self.P * u * u - self.Q * v * v == self.R

    @property
    def discriminant(self) -> int:
        return self.P * self.Q

    def is_hyperbolic(self) -> bool:
        """True when unit orbits exist: ``P*Q`` positive and not a square."""
        pq = self.discriminant
        return pq > 0 and is_perfect_square(pq) is None

    def __str__(self) -> str:
        left = "U^2" if self.P == 1 else f"{self.P}*U^2"
        return f"{left} - {self.Q}*V^2 = {self.R}"


@dataclass(frozen=True)
class PellClass:
    """A base solution of a conic together with a unit that moves along its orbit."""

    conic: ConicForm
    base: Pair
    unit: Pair

    def __post_init__(self):
        if not self.conic.holds(*self.base):
            raise ValueError(f"base {self.base} does not satisfy {self.conic}")
        p, q = self.unit
        if p * p - self.conic.discriminant * q * q != 1:
            raise ValueError(f"{self.unit} is not a unit of norm 1 for d = {self.conic.discriminant}")

    def family(self, count: int) -> List[Pair]:
        return generate_family(self.conic, self.base, self.unit, count)


def reduce_spec(spec: EquationSpec) -> ConicForm:
    return ConicForm(spec.C, spec.D, spec.E)


def _check_radicand(d: int) -> None:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if is_perfect_square(d) is not None:
        raise ValueError(f"d = {d} is a perfect square")


def cf_sqrt(d: int) -> Tuple[int, List[int]]:
    """Continued fraction of sqrt(d) as ``(a0, period)``."""
    _check_radicand(d)
    a0 = isqrt(d)
    m, den, a = 0, 1, a0
    period = []
    # the period ends at the first partial quotient equal to 2*a0
    while a != 2 * a0:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        period.append(a)
    return a0, period


def fundamental_unit(d: int) -> Pair:
    """Smallest positive ``(p, q)`` with ``p^2 - d*q^2 = 1``."""
    a0, period = cf_sqrt(d)
    # For an odd period the first candidate has norm -1; going round twice fixes it.
    quotients = period if len(period) % 2 == 0 else period * 2
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for a in quotients[:-1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    assert p * p - d * q * q == 1
    return p, q


def base_solutions(conic: ConicForm, v_bound: int, prefilter: bool = False) -> List[Pair]:
    """All ``(u, v)`` with ``0 <= v <= v_bound``, ``u >= 0`` on the conic."""
    if v_bound < 1:
        raise ValueError("v_bound must be >= 1")
    P, Q, R = conic.P, conic.Q, conic.R
    out = []
    for v in range(v_bound + 1):
        num = R + Q * v * v
        if num % P:
            continue
        u = is_perfect_square(num // P, prefilter=prefilter)
        if u is not None:
            out.append((u, v))
    return out


def generate_family(conic: ConicForm, base: Pair, unit: Pair, count: int) -> List[Pair]:
    """``count + 1`` conic points starting at ``base``.

    Each step maps ``(u, v)`` to ``(p*u + Q*q*v, P*q*u + p*v)``, which keeps
    ``P*u^2 - Q*v^2`` fixed whenever ``p^2 - P*Q*q^2 = 1``.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if not conic.holds(*base):
        raise ValueError(f"base {base} does not satisfy {conic}")
    p, q = unit
    if p * p - conic.discriminant * q * q != 1:
        raise ValueError(f"unit {unit} has norm != 1 for d = {conic.discriminant}")
    P, Q = conic.P, conic.Q
    u, v = base
    out = [(u, v)]
    for _ in range(count):
        u, v = p * u + Q * q * v, P * q * u + p * v
        out.append((u, v))
    return out


def _ellipse_v_bound(conic: ConicForm) -> int:
    # P*Q < 0 means |P|u^2 + |Q|v^2 = |R|, so v^2 <= |R| / |Q|
    return max(1, isqrt(abs(conic.R) // abs(conic.Q)))


def conic_points(
    conic: ConicForm,
    v_bound: int = DEFAULT_V_BOUND,
    family_count: int = DEFAULT_FAMILY_COUNT,
    prefilter: bool = False,
) -> List[Pair]:
    """Nonnegative conic points from the bounded scan plus unit orbits in both directions."""
    if conic.discriminant < 0:
        return base_solutions(conic, _ellipse_v_bound(conic), prefilter=prefilter)
    bases = base_solutions(conic, v_bound, prefilter=prefilter)
    points = set(bases)
    if conic.is_hyperbolic():
        p, q = fundamental_unit(conic.discriminant)
        for base in bases:
            for unit in ((p, q), (p, -q)):
                for u, v in generate_family(conic, base, unit, family_count):
                    points.add((abs(u), abs(v)))
    return sorted(points, key=lambda uv: (uv[1], uv[0]))


def solve_general(
    spec: EquationSpec,
    v_bound: int = DEFAULT_V_BOUND,
    family_count: int = DEFAULT_FAMILY_COUNT,
    allow_zero: bool = False,
    prefilter: bool = False,
) -> List[Pair]:
    """Solutions ``(X, Y)`` with ``X, Y >= 0`` found within the bounds, sorted.

    ``v_bound`` limits ``V = Y**b`` in the base scan (ignored for
    ellipse-type conics, whose solutions are bounded anyway).
    ``family_count`` is the number of unit steps taken from each base in
    each direction. Unless ``allow_zero`` is set, pairs with a zero
    component are dropped.
    """
    conic = reduce_spec(spec)
    found = set()
    for u, v in conic_points(conic, v_bound, family_count, prefilter=prefilter):
        X = nth_root(u, spec.a, prefilter=prefilter)
        if X is None:
            continue
        Y = nth_root(v, spec.b, prefilter=prefilter)
        if Y is None:
            continue
        if not allow_zero and (X == 0 or Y == 0):
            continue
        found.add((X, Y))
    return sorted(found)
