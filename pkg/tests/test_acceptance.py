"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings. Every tolerance is exact; the timing figures are printed
for sizing, not asserted.
"""

import time
from contextlib import contextmanager

import pytest

from lucasatoms.atoms import (
    atom,
    atom_division,
    atom_eval,
    atom_reduction,
    atom_symmetric,
    decompose_ratio,
    lucanomial,
)
from lucasatoms.exactpoly import BiPoly
from lucasatoms.holonomy import divisibility_scan, fit_recurrence
from lucasatoms.lucasfam import (
    LucasParams,
    discriminant,
    lucas_int,
    lucas_poly,
)
from lucasatoms.numtheory import (
    divisors,
    euler_phi,
    is_prime,
    legendre,
    mobius,
    vp_int,
)
from lucasatoms.valuations import (
    Regime,
    classify,
    rank_of_appearance,
    vp_atom_closed,
    vp_atom_mobius,
    vp_atom_oracle,
)

FIB = LucasParams(1, 1)


@contextmanager
def criterion(num, description):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num:2d}: {description} [{time.perf_counter() - start:.1f}s]")
        raise
    print(f"PASS criterion {num:2d}: {description} [{time.perf_counter() - start:.1f}s]")


def test_criterion_01_factorization_identity():
    with criterion(1, "U_n = prod of atoms over divisors, n <= 300"):
        for n in range(1, 301):
            prod = BiPoly.one()
            for d in divisors(n):
                prod = prod * atom(d)
            assert prod == lucas_poly(n), n


def test_criterion_02_atom_fixtures():
    with criterion(2, "atom fixtures byte-exact in canonical text"):
        assert str(atom(2)) == "s"
        assert str(atom(3)) == "s^2 + t"
        assert str(atom(4)) == "s^2 + 2*t"
        assert str(atom(6)) == "s^2 + 3*t"


def test_criterion_03_route_agreement():
    with criterion(3, "route agreement: sym=div to 300, reduction to 200"):
        for n in range(1, 301):
            assert atom_symmetric(n) == atom_division(n), n
        for n in range(1, 201):
            assert atom_reduction(n) == atom_division(n), n


def test_criterion_04_structural_properties():
    with criterion(4, "nonnegative, weighted-homogeneous, monic, n <= 500"):
        for n in range(2, 501):
            poly = atom(n)
            phi = euler_phi(n)
            assert all(c >= 0 for _, _, c in poly.terms()), n
            assert poly.is_weighted_homogeneous(phi), n
            assert poly.coeff(phi, 0) == 1, n


def _lift_pair(p):
    if p == 2:
        return BiPoly({(2, 0): 1, (0, 1): 2}), BiPoly({(0, 2): -1})
    return BiPoly.var_s() * atom(2 * p), BiPoly.monomial(0, p)


def test_criterion_05_reduction_identities():
    with criterion(5, "index-lift identities, p in {2,3,5,7}, n <= 30, m <= 3"):
        for p in (2, 3, 5, 7):
            s_val, t_val = _lift_pair(p)
            # single prime step, cleared of the division: P_n(S,T) = P_pn * P_n
            for n in range(2, 31):
                if n % p == 0:
                    continue
                assert atom(n).subs(s_val, t_val) == atom(p * n) * atom(n), (p, n)
            # prime-power steps: P_{p^m n} = P_{p^(m-1) n}(S, T)
            for m in (2, 3):
                for n in [1] + [x for x in range(2, 31) if x % p]:
                    lhs = atom_symmetric(p**m * n)
                    rhs = atom_symmetric(p ** (m - 1) * n).subs(s_val, t_val)
                    assert lhs == rhs, (p, m, n)


# Parameter grid covering every valuation regime with at least four pairs each.
VALUATION_GRID = (
    [(p, s, t) for p in (2, 3, 5, 7, 11) for s, t in ((1, 1), (1, 2), (3, 1), (2, 1))]
    + [(2, 4, 1), (2, 6, 1), (2, 2, 3), (2, 4, 7)]  # p=2, even s, odd t
    + [(2, 1, 3), (2, 3, 5), (2, 5, 1)]  # p=2, odd s and t
    + [(2, 1, 4), (2, 3, 2), (3, 1, 3), (5, 1, 5), (3, 2, 3)]  # p | t only
    + [(2, 2, 16), (3, 3, 81), (2, 2, 8), (5, 5, 125), (3, 3, 27)]  # b > 2a
    + [(2, 2, 4), (2, 6, 36), (3, 6, 36), (3, 3, 9), (5, 10, 100)]  # b = 2a
    + [(2, 4, 2), (3, 9, 3), (2, 8, 2), (5, 25, 5), (5, 5, 5)]  # generic b < 2a
    + [(2, 2, 2), (2, 4, 8), (2, 2, 6), (2, 6, 2), (2, 8, 32)]  # p=2, b = 2a-1
    + [(3, 3, 3), (3, 9, 27), (3, 3, 12), (3, 6, 3)]  # p=3, b = 2a-1
)


def test_criterion_06_valuation_triple_agreement():
    with criterion(6, "closed = mobius = oracle on the regime grid, n <= 200"):
        coverage = {regime: set() for regime in Regime}
        for p, s, t in VALUATION_GRID:
            params = LucasParams(s, t)
            coverage[classify(p, params).regime].add((p, s, t))
            for n in range(2, 201):
                closed = vp_atom_closed(p, params, n)
                via_mobius = vp_atom_mobius(p, params, n)
                oracle = vp_atom_oracle(p, params, n)
                assert closed == via_mobius == oracle, (p, s, t, n)
        for regime, points in coverage.items():
            assert len(points) >= 4, (regime, sorted(points))


def test_criterion_07_spot_valuations():
    with criterion(7, "spot valuations against the integer oracle"):
        spots = [
            (2, FIB, 6, 2),
            (5, FIB, 25, 1),
            (7, FIB, 8, 1),
            (2, LucasParams(2, 2), 4, 3),
            (2, LucasParams(2, 2), 8, 3),
        ]
        for p, params, n, expected in spots:
            assert vp_atom_closed(p, params, n) == expected
            assert vp_atom_oracle(p, params, n) == expected


def test_criterion_08_rank_properties():
    with criterion(8, "rank properties for primes p <= 50 on the coprime-t grid"):
        primes = [p for p in range(2, 51) if is_prime(p)]
        pairs = ((1, 1), (1, 2), (3, 1), (2, 1))
        for p in primes:
            for s, t in pairs:
                if t % p == 0:
                    continue
                params = LucasParams(s, t)
                rho = rank_of_appearance(p, params).rho
                delta = discriminant(params)
                if p > 2:
                    if delta % p == 0:
                        assert rho == p, (p, s, t)
                    else:
                        assert (p - legendre(delta, p)) % rho == 0, (p, s, t)
                for m in range(1, 201):
                    assert (lucas_int(m, params) % p == 0) == (m % rho == 0), (p, s, t, m)
                least = next(
                    n for n in range(2, rho + 1) if atom_eval(n, params) % p == 0
                )
                assert least == rho, (p, s, t)
                assert vp_atom_oracle(p, params, rho) == vp_int(
                    p, lucas_int(rho, params)
                ), (p, s, t)


def test_criterion_09_convolution_identities():
    with criterion(9, "Mobius convolution identities, n <= 2000"):
        for n in range(1, 2001):
            ds = divisors(n)
            assert sum(mobius(d) * (n // d) for d in ds) == euler_phi(n), n
            for r in range(1, 31):
                total = sum(mobius(d) for d in ds if (n // d) % r == 0)
                assert total == (1 if n == r else 0), (n, r)
        for p in (2, 3, 5):
            for q in range(1, 31):
                if q % p == 0:
                    continue
                for n in range(1, 2001):
                    total = sum(
                        mobius(d) * vp_int(p, n // d)
                        for d in divisors(n)
                        if (n // d) % q == 0
                    )
                    m, rem = divmod(n, q)
                    is_hit = rem == 0 and m >= p and p ** vp_int(p, m) == m
                    assert total == (1 if is_hit else 0), (p, q, n)


def test_criterion_10_lucanomial_integrality():
    with criterion(10, "lucanomial integrality and nonnegativity, n <= 25"):
        for n in range(0, 26):
            for k in range(0, n + 1):
                nums = list(range(2, n + 1))
                dens = list(range(2, k + 1)) + list(range(2, n - k + 1))
                dec = decompose_ratio(nums, dens)
                assert dec.is_polynomial, (n, k)
                exps, poly = lucanomial(n, k)
                assert dec.quotient_exponents == exps, (n, k)
                assert all(c >= 0 for _, _, c in poly.terms()), (n, k)
        _, poly63 = lucanomial(6, 3)
        assert poly63.eval(1, 1) == 60


def test_criterion_11_non_holonomicity():
    with criterion(11, "scan to 3000, periodicity refuted, fits refuted l,D <= 3"):
        pattern = divisibility_scan(2, FIB, 3000)
        expected = {3} | {3 * 2**h for h in range(1, 11) if 3 * 2**h <= 3000}
        assert set(pattern.hit_indices) == expected
        assert pattern.matches
        assert not pattern.ap_expressible  # no period <= 1000 works
        for order in (1, 2, 3):
            for degree in (0, 1, 2, 3):
                window_len = 3 * (order + 1) * (degree + 1)
                fit = fit_recurrence(FIB, order, degree, 10, 10 + window_len)
                assert fit.status == "refuted", (order, degree)


def test_criterion_12_t_zero_profile():
    with criterion(12, "atoms collapse to s^phi(n) at t = 0, n <= 200"):
        s_var, zero = BiPoly.var_s(), BiPoly.zero()
        for n in range(2, 201):
            assert atom(n).subs(s_var, zero) == BiPoly.monomial(euler_phi(n), 0), n


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
