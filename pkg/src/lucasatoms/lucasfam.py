"""Classical recurrent families: Lucas polynomials U_n, companion polynomials
W_n = alpha^n + beta^n, cyclotomic polynomials, and integer specializations.

With s = alpha + beta and t = -alpha*beta, both polynomial families satisfy
X_n = s*X_{n-1} + t*X_{n-2}; U starts 0, 1 and W starts 2, s. Every monomial
s^i t^j of U_n has i + 2j = n - 1 (and i + 2j = n for W_n), so internally the
recurrences run on compact "weight lists" indexed by the t-degree j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactpoly import BiPoly, UniPoly
from .numtheory import divisors, radical

__all__ = [
    "LucasParams",
    "companion_int",
    "companion_poly",
    "cyclotomic",
    "discriminant",
    "lucas_int",
    "lucas_poly",
]


@dataclass(frozen=True)
class LucasParams:
    """Integer parameters (s, t) of the recurrence X_n = s*X_{n-1} + t*X_{n-2}."""

    s: int
    t: int


def discriminant(params: LucasParams) -> int:
    """Discriminant s^2 + 4t of X^2 - sX - t."""
    return params.s * params.s + 4 * params.t


# Weight-list tables: _U_WEIGHTS[n][j] is the coefficient of s^(n-1-2j) t^j in U_n,
# _W_WEIGHTS[n][j] the coefficient of s^(n-2j) t^j in W_n.
_U_WEIGHTS: list[tuple[int, ...]] = [(), (1,)]
_W_WEIGHTS: list[tuple[int, ...]] = [(2,), (1,)]


def _extend_weights(table: list[tuple[int, ...]], n: int, weight_of_index_1: int) -> None:
    while len(table) <= n:
        k = len(table)
        prev, prev2 = table[k - 1], table[k - 2]
        length = (k - 1 + weight_of_index_1) // 2 + 1
        row = [0] * length
        for j, v in enumerate(prev):
            row[j] += v
        for j, v in enumerate(prev2):
            row[j + 1] += v
        table.append(tuple(row))


def lucas_weights(n: int) -> tuple[int, ...]:
    """Compact coefficients of U_n: entry j is the coefficient of s^(n-1-2j) t^j."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    _extend_weights(_U_WEIGHTS, n, 0)
    return _U_WEIGHTS[n]


def companion_weights(n: int) -> tuple[int, ...]:
    """Compact coefficients of W_n: entry j is the coefficient of s^(n-2j) t^j."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    _extend_weights(_W_WEIGHTS, n, 1)
    return _W_WEIGHTS[n]


_U_POLY: dict[int, BiPoly] = {}
_W_POLY: dict[int, BiPoly] = {}


def lucas_poly(n: int) -> BiPoly:
    """U_n(s, t) with U_0 = 0, U_1 = 1, U_n = s*U_{n-1} + t*U_{n-2}."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    poly = _U_POLY.get(n)
    if poly is None:
        poly = BiPoly.from_weight_list(n - 1, lucas_weights(n)) if n else BiPoly.zero()
        _U_POLY[n] = poly
    return poly


def companion_poly(n: int) -> BiPoly:
    """W_n(s, t) = alpha^n + beta^n, with W_0 = 2 and W_1 = s."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    poly = _W_POLY.get(n)
    if poly is None:
        poly = BiPoly.from_weight_list(n, companion_weights(n))
        _W_POLY[n] = poly
    return poly


def lucas_int(n: int, params: LucasParams) -> int:
    """Exact U_n(s, t) by the integer recurrence (no polynomial expansion)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    u0, u1 = 0, 1
    for _ in range(n):
        u0, u1 = u1, params.s * u1 + params.t * u0
    return u0


def companion_int(n: int, params: LucasParams) -> int:
    """Exact W_n(s, t) by the integer recurrence with seeds 2, s."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    w0, w1 = 2, params.s
    for _ in range(n):
        w0, w1 = w1, params.s * w1 + params.t * w0
    return w0


_CYCLOTOMIC: dict[int, UniPoly] = {}


def cyclotomic(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial in q, monic over the integers.

    Squarefree indices come from the division sieve (q^n - 1 divided exactly by
    the product of the cyclotomics of the proper divisors); other indices are
    the radical's polynomial with q replaced by q^(n/rad).
    """
    if n < 1:
        raise ValueError("index must be positive")
    poly = _CYCLOTOMIC.get(n)
    if poly is not None:
        return poly
    if n == 1:
        poly = UniPoly((-1, 1))
    else:
        rad = radical(n)
        if rad != n:
            poly = cyclotomic(rad).inflate(n // rad)
        else:
            den = UniPoly.one()
            for d in divisors(n)[:-1]:
                den = den * cyclotomic(d)
            poly = UniPoly.q_power_minus_one(n).exact_div(den)
    _CYCLOTOMIC[n] = poly
    return poly
