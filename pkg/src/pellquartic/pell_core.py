"""Solutions of x^2 - 2t^2 = -1 by four independent routes.

The same sequence ``(x_n, t_n)`` is produced by

* the linear recurrence ``x' = 3x + 4t``, ``t' = 2x + 3t`` (:func:`step`),
* the integer matrix power ``A**n @ (1, eps)`` (:func:`solution_at`),
* the exact eigen-decomposition of ``A`` over Q(sqrt 2) (:func:`closed_form`),
* a binomial expansion of ``(3 + 2*sqrt 2)**n`` (:func:`binomial_t`).

Seeds are ``(1, eps)`` with ``eps = +1`` or ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Union

from .quad_field import CollapseError, QuadElem

Entry = Union[int, QuadElem]


@dataclass(frozen=True)
class PellPair:
    x: int
    t: int
    n: int
    eps: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")
        if self.n < 0:
            raise ValueError("index must be nonnegative")

    def satisfies(self) -> bool:
        return self.x * self.x - 2 * self.t * self.t == -1

    @property
    def pair(self) -> tuple[int, int]:
        return (self.x, self.t)


def _entry_kind(e) -> type:
    if isinstance(e, QuadElem):
        return QuadElem
    if isinstance(e, int) and not isinstance(e, bool):
        return int
    raise TypeError(f"matrix entries must be int or QuadElem, got {type(e).__name__}")


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix whose entries are all ints or all QuadElems."""

    e11: Entry
    e12: Entry
    e21: Entry
    e22: Entry
    kind: type = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        kinds = {_entry_kind(e) for e in self.entries()}
        if len(kinds) != 1:
            raise TypeError("mixed int/QuadElem entries in Mat2")
        object.__setattr__(self, "kind", kinds.pop())

    @classmethod
    def identity(cls, like: Mat2 | None = None) -> Mat2:
        if like is not None and like.kind is QuadElem:
            d = like.e11.d
            one, zero = QuadElem(1, 0, d), QuadElem(0, 0, d)
            return cls(one, zero, zero, one)
        return cls(1, 0, 0, 1)

    def entries(self) -> tuple:
        return (self.e11, self.e12, self.e21, self.e22)

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            if other.kind is not self.kind:
                raise TypeError("cannot multiply integer and field matrices")
            return Mat2(
                self.e11 * other.e11 + self.e12 * other.e21,
                self.e11 * other.e12 + self.e12 * other.e22,
                self.e21 * other.e11 + self.e22 * other.e21,
                self.e21 * other.e12 + self.e22 * other.e22,
            )
        if isinstance(other, tuple) and len(other) == 2:
            u, v = other
            return (self.e11 * u + self.e12 * v, self.e21 * u + self.e22 * v)
        return NotImplemented

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(*(p - q for p, q in zip(self.entries(), other.entries())))

    def scale(self, c) -> Mat2:
        return Mat2(*(c * e for e in self.entries()))

    def det(self) -> Entry:
        return self.e11 * self.e22 - self.e12 * self.e21

    def inverse(self) -> Mat2:
        """Inverse over Q(sqrt d); only defined for field matrices."""
        if self.kind is not QuadElem:
            raise TypeError("inverse is only defined for QuadElem matrices")
        inv_det = self.det().inv()
        return Mat2(
            self.e22 * inv_det,
            -self.e12 * inv_det,
            -self.e21 * inv_det,
            self.e11 * inv_det,
        )

    def to_field(self, d: int = 2) -> Mat2:
        if self.kind is QuadElem:
            return self
        return Mat2(*(QuadElem(e, 0, d) for e in self.entries()))

    def collapse(self) -> Mat2:
        """Convert a field matrix to integers, raising CollapseError if impossible."""
        if self.kind is int:
            return self
        return Mat2(*(e.as_integer() for e in self.entries()))

    def rows(self) -> list[list[Entry]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]


A = Mat2(3, 4, 2, 3)

_SQRT2 = QuadElem(0, 1, 2)
UNIT = QuadElem(3, 2, 2)  # 3 + 2*sqrt(2), the dominant eigenvalue of A
P = Mat2(QuadElem(2, 0, 2), QuadElem(2, 0, 2), _SQRT2, -_SQRT2)
D = Mat2(UNIT, QuadElem(0, 0, 2), QuadElem(0, 0, 2), UNIT.conj())


def _check_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")


def seed(eps: int) -> PellPair:
    _check_eps(eps)
    return PellPair(1, eps, 0, eps)


def step(p: PellPair) -> PellPair:
    return PellPair(3 * p.x + 4 * p.t, 2 * p.x + 3 * p.t, p.n + 1, p.eps)


def iter_pairs(eps: int) -> Iterator[PellPair]:
    """Endless recurrence sequence starting at the seed."""
    p = seed(eps)
    while True:
        yield p
        p = step(p)


def generate(eps: int, count: int) -> List[PellPair]:
    """Indices ``0..count`` by the recurrence."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = [seed(eps)]
    for _ in range(count):
        out.append(step(out[-1]))
    return out


def mat_pow(m: Mat2, n: int) -> Mat2:
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = Mat2.identity(m)
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def solution_at(n: int, eps: int) -> PellPair:
    _check_eps(eps)
    x, t = mat_pow(A, n) @ (1, eps)
    return PellPair(x, t, n, eps)


def _eigen_powers(n: int) -> tuple[QuadElem, QuadElem]:
    return UNIT**n, UNIT.conj() ** n


def closed_form_matrix(n: int, collapse: bool = True) -> Mat2:
    """``A**n = P D**n P^-1`` written out entrywise in terms of the eigenvalue powers.

    With ``collapse`` (the default) the entries are converted to ints; a
    failure to collapse raises :class:`CollapseError`.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    a, b = _eigen_powers(n)
    half = Fraction(1, 2)
    diag = (a + b) * half
    m = Mat2(diag, _SQRT2 * half * (a - b), _SQRT2 * Fraction(1, 4) * (a - b), diag)
    return m.collapse() if collapse else m


def closed_form(n: int, eps: int) -> PellPair:
    _check_eps(eps)
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = _eigen_powers(n)
    x = (1 + eps * _SQRT2) * Fraction(1, 2) * a + (1 - eps * _SQRT2) * Fraction(1, 2) * b
    t = (2 * eps + _SQRT2) * Fraction(1, 4) * a + (2 * eps - _SQRT2) * Fraction(1, 4) * b
    return PellPair(x.as_integer(), t.as_integer(), n, eps)


def binomial_t(n: int, eps: int) -> int:
    """The t component as eps * (even-index binomial sum) + (odd-index binomial sum).

    Expands ``(3 + 2*sqrt 2)**n``: even powers of ``2*sqrt 2`` contribute
    ``C(n, 2k) 3^(n-2k) 2^(3k)``, odd ones ``C(n, 2k+1) 3^(n-2k-1) 2^(3k+1)``.
    """
    _check_eps(eps)
    if n < 0:
        raise ValueError("index must be nonnegative")
    even = odd = 0
    binom = 1  # C(n, j), updated multiplicatively
    for j in range(n + 1):
        k, r = divmod(j, 2)
        if r == 0:
            even += binom * 3 ** (n - j) * 2 ** (3 * k)
        else:
            odd += binom * 3 ** (n - j) * 2 ** (3 * k + 1)
        binom = binom * (n - j) // (j + 1)
    return eps * even + odd


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class EigenReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __iter__(self):
        return iter(self.checks)


def eigen_check() -> EigenReport:
    """Verify the diagonalization of ``A`` exactly in Q(sqrt 2)."""
    checks = []
    af = A.to_field()
    lambdas = (D.e11, D.e22)

    for i, lam in enumerate(lambdas, 1):
        char = (af - Mat2.identity(af).scale(lam)).det()
        quad = lam * lam - 6 * lam + 1
        ok = char == 0 and quad == 0
        checks.append(
            CheckResult(f"characteristic_root_{i}", ok, f"lambda = {lam}; det(A - lambda I) = {char}")
        )

    det_p = P.det()
    invertible = not det_p.is_zero()
    checks.append(CheckResult("P_invertible", invertible, f"det P = {det_p}"))

    if invertible:
        similar = P.inverse() @ af @ P
        ok = similar == D
        s11, s12, s21, s22 = similar.entries()
        checks.append(CheckResult("similarity", ok, f"P^-1 A P = [[{s11}, {s12}], [{s21}, {s22}]]"))
    else:
        checks.append(CheckResult("similarity", False, "P is singular"))

    columns = ((P.e11, P.e21), (P.e12, P.e22))
    for i, (lam, v) in enumerate(zip(lambdas, columns), 1):
        av = af @ v
        lv = (lam * v[0], lam * v[1])
        checks.append(
            CheckResult(
                f"eigenpair_{i}",
                av == lv,
                f"A v = ({av[0]}, {av[1]}); lambda v = ({lv[0]}, {lv[1]})",
            )
        )
    return EigenReport(tuple(checks))


__all__ = [
    "A",
    "CollapseError",
    "CheckResult",
    "D",
    "EigenReport",
    "Mat2",
    "P",
    "PellPair",
    "UNIT",
    "binomial_t",
    "closed_form",
    "closed_form_matrix",
    "eigen_check",
    "generate",
    "iter_pairs",
    "mat_pow",
    "seed",
    "solution_at",
    "step",
]
