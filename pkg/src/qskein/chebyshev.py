"""Chebyshev-type polynomial families and canonical forms over them.

Three families share the recursion P(n) = x*P(n-1) - P(n-2):

* ``chebyshev_t``: seeds T_0 = 2, T_1 = x (trace/power-sum normalisation),
* ``chebyshev_s``: seeds S_0 = 1, S_1 = x,
* ``chebyshev_a``: A_1 = S_1, A_2 = S_2, then A_n = S_n + A_(n-2); these are
  monic and interleave the S family.

All coefficients are exact rationals.  ``chebyshev_reduce`` rewrites an
arbitrary polynomial as sum_{j<N} c_j(T_N(x)) * x**j, which witnesses that
1, x, ..., x**(N-1) generate everything over the subring hit by T_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class Polynomial:
    """Sparse univariate polynomial with Fraction coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] | Iterable | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: dict[int, Fraction] = {}
        for e, v in items:
            if e < 0:
                raise ValueError("negative exponent")
            v = Fraction(v)
            if v:
                c[e] = c.get(e, Fraction(0)) + v
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def constant(cls, v) -> "Polynomial":
        return cls({0: v})

    @classmethod
    def x(cls) -> "Polynomial":
        return cls({1: 1})

    def coefficient(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._c)

    def leading_coefficient(self) -> Fraction:
        return self._c[self.degree()]

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        acc = dict(self._c)
        for e, v in other._c.items():
            acc[e] = acc.get(e, Fraction(0)) + v
        return Polynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + v1 * v2
        return Polynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Polynomial({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Substitute ``inner`` for the variable, exactly."""
        out = Polynomial()
        for e, v in self._c.items():
            out = out + Polynomial({0: v}) * (inner ** e)
        return out

    def __eq__(self, other: object) -> bool:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            if e == 0:
                parts.append(str(v))
            elif e == 1:
                parts.append("x" if v == 1 else f"{v}*x")
            else:
                parts.append(f"x^{e}" if v == 1 else f"{v}*x^{e}")
        return " + ".join(parts)


def _as_poly(obj) -> Polynomial | None:
    if isinstance(obj, Polynomial):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Polynomial({0: obj})
    return None


@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("index must be a natural number")
    if n == 0:
        return Polynomial({0: 2})
    if n == 1:
        return Polynomial.x()
    return Polynomial.x() * chebyshev_t(n - 1) - chebyshev_t(n - 2)


@lru_cache(maxsize=None)
def chebyshev_s(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("index must be a natural number")
    if n == 0:
        return Polynomial({0: 1})
    if n == 1:
        return Polynomial.x()
    return Polynomial.x() * chebyshev_s(n - 1) - chebyshev_s(n - 2)


@lru_cache(maxsize=None)
def chebyshev_a(n: int) -> Polynomial:
    """Monic interleaved family; defined for n >= 1 only."""
    if n < 1:
        raise ValueError("the interleaved family starts at index 1")
    if n <= 2:
        return chebyshev_s(n)
    return chebyshev_s(n) + chebyshev_a(n - 2)


@dataclass(frozen=True)
class ChebyshevForm:
    """Canonical form p(x) = sum_{j<N} columns[j](T_N(x)) * x**j.

    ``columns[j]`` is a polynomial in one variable standing for T_N(x).
    """

    order: int
    columns: tuple[Polynomial, ...]

    def substitute(self) -> Polynomial:
        """Expand back to a plain polynomial (round-trip oracle)."""
        t_n = chebyshev_t(self.order)
        out = Polynomial()
        for j, col in enumerate(self.columns):
            if not col.is_zero():
                out = out + col.compose(t_n) * Polynomial({j: 1})
        return out


def chebyshev_reduce(p: Polynomial, order: int) -> ChebyshevForm:
    """Rewrite p over the basis x**j (j < order) with T_order-coefficients.

    Works by repeated top-degree elimination with
    x**order = T_order(x) - (lower terms); the top coefficient of T_order
    is 1, so the elimination is exact and terminates.
    """
    if order < 1:
        raise ValueError("order must be positive")
    lam = chebyshev_t(order).coefficients()  # includes the top coefficient 1
    # working terms: (x-degree, y-degree) -> coefficient, y standing for T_order(x)
    work: dict[tuple[int, int], Fraction] = {
        (e, 0): v for e, v in p.coefficients().items()
    }
    while True:
        top = max((k for k in work if k[0] >= order), default=None, key=lambda k: k[0])
        if top is None:
            break
        m, ydeg = top
        c = work.pop(top)
        key = (m - order, ydeg + 1)
        work[key] = work.get(key, Fraction(0)) + c
        if work[key] == 0:
            del work[key]
        for t, lt in lam.items():
            if t == order:
                continue
            key = (m - order + t, ydeg)
            work[key] = work.get(key, Fraction(0)) - c * lt
            if work[key] == 0:
                del work[key]
    cols = []
    for j in range(order):
        cols.append(Polynomial({y: v for (xd, y), v in work.items() if xd == j}))
    return ChebyshevForm(order, tuple(cols))
