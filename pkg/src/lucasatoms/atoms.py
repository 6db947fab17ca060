"""Lucas atoms: the irreducible factors P_n of the Lucas polynomials.

U_n(s, t) = prod_{d | n} P_d(s, t), with P_1 = 1 and, for n >= 2, P_n the
cyclotomic polynomial of index n homogenized in the root pair (alpha, beta)
of X^2 - sX - t and rewritten in s = alpha + beta, t = -alpha*beta.

Three independent construction routes are provided and cross-checked:

* symmetric -- purely additive: with m = phi(n) and palindromic cyclotomic
  coefficients c_0..c_m, P_n = sum_{j < m/2} c_j (-t)^j W_{m-2j} plus, for m
  even, the middle term c_{m/2} (-t)^{m/2}, where W_k = alpha^k + beta^k.
* division -- peel P_n out of U_n by exact division by the atoms of the
  proper divisors of n.
* reduction -- strip the largest prime power p^m off n = p^m * n' and rewrite
  P_n through P at smaller index with (s, t) replaced by (s^2+2t, -t^2) for
  p = 2 or (s*P_2p, t^p) for odd p, dividing by P_{n'} when m = 1.

Every atom with n >= 2 is weighted-homogeneous (each monomial s^i t^j has
i + 2j = phi(n)), monic in s, and has nonnegative coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Mapping

from .errors import InternalConsistencyError
from .exactpoly import BiPoly, exact_div_in_s
from .lucasfam import LucasParams, cyclotomic, lucas_poly
from .numtheory import divisors, euler_phi, factorize, is_prime

__all__ = [
    "AtomDecomposition",
    "ROUTES",
    "atom",
    "atom_division",
    "atom_eval",
    "atom_reduction",
    "atom_symmetric",
    "decompose_ratio",
    "lucanomial",
    "prime_search",
]

ROUTES = ("symmetric", "division", "reduction", "checked")

_SYM_CACHE: dict[int, BiPoly] = {}
_DIV_CACHE: dict[int, BiPoly] = {}
_RED_CACHE: dict[int, BiPoly] = {}
_CHECKED_CACHE: dict[int, BiPoly] = {}


def _atom_weight_list(n: int) -> tuple[int, list[int]]:
    """(phi(n), compact coefficients of P_n) by the additive symmetric formula.

    Streams the companion weight lists W_1..W_m so no table of large rows is
    retained; entry j of the result is the coefficient of s^(m-2j) t^j.
    """
    m = euler_phi(n)
    c = cyclotomic(n).coeffs
    half = m // 2
    acc = [0] * (half + 1)
    if m % 2 == 0:
        mid = c[half]
        if mid:
            acc[half] = mid if half % 2 == 0 else -mid
    w_prev2 = [2]  # W_0
    w_k = [1]  # W_1
    for k in range(1, m + 1):
        if k > 1:
            row = [w_k[0]]
            row.extend(a + b for a, b in zip_longest(w_k[1:], w_prev2, fillvalue=0))
            w_prev2, w_k = w_k, row
        if (m - k) % 2 == 0:
            j = (m - k) // 2
            coef = c[j]
            if coef:
                if j % 2:
                    coef = -coef
                stop = j + len(w_k)
                acc[j:stop] = [a + coef * w for a, w in zip(acc[j:stop], w_k)]
    return m, acc


def atom_symmetric(n: int) -> BiPoly:
    """P_n by the additive route from cyclotomic coefficients and W_k."""
    if n < 1:
        raise ValueError("index must be positive")
    poly = _SYM_CACHE.get(n)
    if poly is None:
        if n == 1:
            poly = BiPoly.one()
        else:
            m, acc = _atom_weight_list(n)
            poly = BiPoly.from_weight_list(m, acc)
        _SYM_CACHE[n] = poly
    return poly


def atom_division(n: int) -> BiPoly:
    """P_n = U_n / prod of the atoms of the proper divisors, by exact division."""
    if n < 1:
        raise ValueError("index must be positive")
    poly = _DIV_CACHE.get(n)
    if poly is None:
        if n == 1:
            poly = BiPoly.one()
        else:
            poly = lucas_poly(n)
            for d in divisors(n)[:-1]:
                if d == 1:
                    continue
                try:
                    poly = exact_div_in_s(poly, atom_division(d))
                except ValueError as exc:
                    raise InternalConsistencyError(
                        f"inexact division while extracting the atom at {n}: {exc}"
                    ) from exc
        _DIV_CACHE[n] = poly
    return poly


def _reduction_pair(p: int) -> tuple[BiPoly, BiPoly]:
    """The substitution (S, T) that lifts atom indices by the prime p."""
    if p == 2:
        s2_plus_2t = BiPoly({(2, 0): 1, (0, 1): 2})
        minus_t2 = BiPoly({(0, 2): -1})
        return s2_plus_2t, minus_t2
    return BiPoly.var_s() * atom_division(2 * p), BiPoly.monomial(0, p)


def atom_reduction(n: int) -> BiPoly:
    """P_n by stripping the largest prime power off n.

    With n = p^m * n' for the largest prime p (p not dividing n'):
    m = 1 divides the substituted atom by P_{n'}; m >= 2 substitutes into
    P_{n/p} directly. Bases: P_1 = 1, P_q = U_q for prime q, and index 2p
    (odd p) falls back to the division route, which the odd-prime
    substitution itself consumes.
    """
    if n < 1:
        raise ValueError("index must be positive")
    poly = _RED_CACHE.get(n)
    if poly is not None:
        return poly
    if n == 1:
        poly = BiPoly.one()
    elif is_prime(n):
        poly = lucas_poly(n)
    else:
        facts = factorize(n)
        p, m_exp = facts[-1]
        n_rest = n // p**m_exp
        if m_exp == 1 and n_rest == 2 and p > 2:
            poly = atom_division(n)
        else:
            s_val, t_val = _reduction_pair(p)
            if m_exp == 1:
                base = atom_reduction(n_rest)
                try:
                    poly = exact_div_in_s(base.subs(s_val, t_val), base)
                except ValueError as exc:
                    raise InternalConsistencyError(
                        f"inexact division in the reduction route at {n}: {exc}"
                    ) from exc
            else:
                poly = atom_reduction(n // p).subs(s_val, t_val)
    _RED_CACHE[n] = poly
    return poly


def reduction_is_informative(n: int) -> bool:
    """True where the reduction recursion does real work (not a base/fallback)."""
    if n < 4 or is_prime(n):
        return False
    return not (n % 2 == 0 and (n // 2) % 2 == 1 and is_prime(n // 2))


def atom(n: int, route: str = "checked") -> BiPoly:
    """P_n by the requested route; "checked" cross-checks the routes and errors
    on any disagreement."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    if n < 1:
        raise ValueError("index must be positive")
    if route == "symmetric":
        return atom_symmetric(n)
    if route == "division":
        return atom_division(n)
    if route == "reduction":
        return atom_reduction(n)
    poly = _CHECKED_CACHE.get(n)
    if poly is None:
        poly = atom_symmetric(n)
        if poly != atom_division(n):
            raise InternalConsistencyError(
                f"symmetric and division routes disagree at index {n}"
            )
        if reduction_is_informative(n) and atom_reduction(n) != poly:
            raise InternalConsistencyError(
                f"reduction route disagrees at index {n}"
            )
        _CHECKED_CACHE[n] = poly
    return poly


def atom_eval(n: int, params: LucasParams) -> int:
    """Exact integer P_n(s, t) by the symmetric formula over integer W_k values."""
    if n < 1:
        raise ValueError("index must be positive")
    if n == 1:
        return 1
    m = euler_phi(n)
    c = cyclotomic(n).coeffs
    s0, t0 = params.s, params.t
    half = m // 2
    neg_t = -t0
    neg_t_pows = [1] * (half + 1)
    for j in range(1, half + 1):
        neg_t_pows[j] = neg_t_pows[j - 1] * neg_t
    total = 0
    if m % 2 == 0 and c[half]:
        total += c[half] * neg_t_pows[half]
    w_prev, w_k = 2, s0  # W_0, W_1
    for k in range(1, m + 1):
        if k > 1:
            w_prev, w_k = w_k, s0 * w_k + t0 * w_prev
        if (m - k) % 2 == 0:
            j = (m - k) // 2
            if c[j]:
                total += c[j] * neg_t_pows[j] * w_k
    return total


@dataclass(frozen=True)
class AtomDecomposition:
    """Atom exponents of a ratio of Lucas-polynomial products.

    exponents maps each atom index d >= 2 dividing any listed index to
    (a_d, b_d): how many numerator and denominator indices d divides. The
    ratio is a polynomial iff a_d >= b_d everywhere; quotient_exponents then
    gives the surviving atom multiplicities.
    """

    exponents: Mapping[int, tuple[int, int]]
    is_polynomial: bool
    quotient_exponents: Mapping[int, int] | None


def decompose_ratio(nums: list[int], dens: list[int]) -> AtomDecomposition:
    """Decide polynomiality of prod U_{n_i} / prod U_{k_j} by atom exponents."""
    for x in list(nums) + list(dens):
        if x < 2:
            raise ValueError("indices must be at least 2 (index 1 carries no atoms)")
    ds = sorted({d for x in set(nums) | set(dens) for d in divisors(x) if d >= 2})
    exponents = {
        d: (
            sum(1 for x in nums if x % d == 0),
            sum(1 for x in dens if x % d == 0),
        )
        for d in ds
    }
    verdict = all(a >= b for a, b in exponents.values())
    quotient = (
        {d: a - b for d, (a, b) in exponents.items() if a > b} if verdict else None
    )
    return AtomDecomposition(exponents, verdict, quotient)


def lucanomial(n: int, k: int) -> tuple[dict[int, int], BiPoly]:
    """Lucas analogue of the binomial coefficient (n over k).

    Returns the atom exponent map {d: e_d} with
    e_d = floor(n/d) - floor(k/d) - floor((n-k)/d) and the expanded product;
    the exponents are always 0 or 1 and the expansion has nonnegative
    coefficients.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    exponents: dict[int, int] = {}
    poly = BiPoly.one()
    for d in range(2, n + 1):
        e = n // d - k // d - (n - k) // d
        if e < 0:
            raise InternalConsistencyError("negative lucanomial exponent")
        if e:
            exponents[d] = e
            poly = poly * atom(d) ** e
    return exponents, poly


def prime_search(n: int, bound: int) -> list[tuple[int, int, int]]:
    """All (s, t, P_n(s,t)) with |s|, |t| <= bound and the value prime,
    sorted lexicographically by (s, t)."""
    if n < 2:
        raise ValueError("index must be at least 2")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out: list[tuple[int, int, int]] = []
    for s in range(-bound, bound + 1):
        for t in range(-bound, bound + 1):
            value = atom_eval(n, LucasParams(s, t))
            if is_prime(value):
                out.append((s, t, value))
    return out
