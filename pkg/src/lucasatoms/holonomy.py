"""Non-holonomicity at desk scale: divisibility-pattern scans and exact
refutation of hypothesized polynomial recurrences for atom sequences.

For fixed integers (s, t) with t != 0, the indices n with p | P_n(s, t) form
geometric families like {k p^h}, so the hit indicator is not eventually
periodic for any period and the sequence P_n(s, t) satisfies no recurrence
P_n = G_0(n) + sum_j G_j(n) P_{n-j} with polynomial coefficients. The scan
checks the mod-p hit set against the closed valuation forms and decides
finite-horizon AP-expressibility; the fitter builds the exact linear system
for candidate (order, degree) pairs and returns either a validated fit or the
minimal inconsistent window prefix with a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .atoms import atom, atom_eval
from .errors import InternalConsistencyError
from .exactpoly import BiPoly, solve_rational
from .lucasfam import LucasParams
from .numtheory import divisors, euler_phi, is_prime, mobius, radical
from .valuations import vp_atom_closed, zero_atom_indices

__all__ = [
    "DivisibilityPattern",
    "RecurrenceFit",
    "divisibility_scan",
    "fit_recurrence",
    "t_zero_profile",
]


# -- cyclotomic coefficients mod p -------------------------------------------

def _mul_qd_minus_1(a: list[int], d: int, p: int) -> list[int]:
    """a(q) * (q^d - 1) mod p."""
    out = [0] * (len(a) + d)
    for i, v in enumerate(a):
        if v:
            out[i + d] = (out[i + d] + v) % p
            out[i] = (out[i] - v) % p
    return out


def _div_qd_minus_1(a: list[int], d: int, p: int) -> list[int]:
    """Exact quotient a(q) / (q^d - 1) mod p."""
    deg = len(a) - 1
    q = [0] * (deg - d + 1)
    for i in range(deg, d - 1, -1):
        carry = q[i] if i <= deg - d else 0
        q[i - d] = (a[i] + carry) % p
    for i in range(d):
        carry = q[i] if i <= deg - d else 0
        if (a[i] + carry) % p:
            raise InternalConsistencyError("inexact cyclotomic division mod p")
    return q


_RADICAL_MOD_CACHE: dict[tuple[int, int], list[int]] = {}


def _cyclotomic_mod(n: int, p: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial reduced mod p.

    The squarefree radical is built as prod_{d | rad} (q^d - 1)^(mu(rad/d))
    with linear-time synthetic steps; other indices spread the radical's
    coefficients (q -> q^(n/rad)).
    """
    rad = radical(n)
    base = _RADICAL_MOD_CACHE.get((rad, p))
    if base is None:
        if rad == 1:
            base = [(-1) % p, 1 % p]
        else:
            nums, dens = [], []
            for d in divisors(rad):
                mu = mobius(rad // d)
                if mu == 1:
                    nums.append(d)
                elif mu == -1:
                    dens.append(d)
            poly = [1 % p]
            for d in sorted(nums, reverse=True):
                poly = _mul_qd_minus_1(poly, d, p)
            for d in sorted(dens, reverse=True):
                poly = _div_qd_minus_1(poly, d, p)
            base = poly
        _RADICAL_MOD_CACHE[(rad, p)] = base
    if rad == n:
        return base
    spread = [0] * ((len(base) - 1) * (n // rad) + 1)
    for i, c in enumerate(base):
        spread[i * (n // rad)] = c
    return spread


# -- divisibility scan --------------------------------------------------------

@dataclass(frozen=True)
class DivisibilityPattern:
    """Hit set {2 <= n <= horizon : p | P_n(s, t)} and its diagnostics.

    matches records agreement with the closed valuation forms;
    ap_expressible records whether some period Q <= horizon/3 makes the hit
    indicator periodic from horizon/3 on (the finite-horizon stand-in for
    "finite union of arithmetic progressions plus a finite set").
    """

    prime: int
    params: LucasParams
    horizon: int
    hit_indices: tuple[int, ...]
    expected: tuple[int, ...]
    matches: bool
    ap_expressible: bool


def _atom_hits_mod_p(p: int, params: LucasParams, horizon: int) -> list[int]:
    """Indices 2..horizon with P_n(s, t) = 0 mod p, via the symmetric-route sum
    with companion values and (-t)^j reduced mod p."""
    s, t = params.s % p, params.t % p
    phis = [0, 1] + [euler_phi(n) for n in range(2, horizon + 1)]
    max_m = max(phis[2:], default=0)
    w = [2 % p, s]  # W_k mod p
    for _ in range(2, max_m + 1):
        w.append((s * w[-1] + t * w[-2]) % p)
    neg_t = (-params.t) % p
    pow_neg_t = [1 % p]
    for _ in range(max_m // 2):
        pow_neg_t.append(pow_neg_t[-1] * neg_t % p)
    hits = []
    for n in range(2, horizon + 1):
        m = phis[n]
        c = _cyclotomic_mod(n, p)
        half = m // 2
        total = 0
        if m % 2 == 0 and c[half]:
            total = c[half] * pow_neg_t[half]
        for j in range(half - 1 + (m % 2), -1, -1):
            if c[j]:
                total += c[j] * pow_neg_t[j] * w[m - 2 * j]
        if total % p == 0:
            hits.append(n)
    return hits


def _eventually_periodic(indicator: list[bool], horizon: int) -> bool:
    """True iff some period Q <= horizon/3 has no break from horizon/3 onward.

    A genuinely (APs + finite set)-shaped hit set keeps its transient part in
    the early horizon, so requiring the periodic tail to start by horizon/3
    leaves at least a full third of the horizon as evidence.
    """
    tail = max(2, horizon // 3)
    for q in range(1, horizon // 3 + 1):
        if all(
            indicator[i] == indicator[i + q] for i in range(tail, horizon - q + 1)
        ):
            return True
    return False


def divisibility_scan(p: int, params: LucasParams, horizon: int) -> DivisibilityPattern:
    """Scan p | P_n(s, t) for 2 <= n <= horizon and compare with the closed forms."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if horizon < 2:
        raise ValueError("horizon must be at least 2")
    if params.t == 0:
        raise ValueError("t = 0 degenerates atoms to monomials; use t_zero_profile")
    zeros = zero_atom_indices(params)
    if zeros:
        raise ValueError(
            f"degenerate parameters: atom value vanishes at {sorted(zeros)}"
        )
    hits = _atom_hits_mod_p(p, params, horizon)
    expected = [
        n for n in range(2, horizon + 1) if vp_atom_closed(p, params, n) > 0
    ]
    indicator = [False] * (horizon + 1)
    for n in hits:
        indicator[n] = True
    return DivisibilityPattern(
        prime=p,
        params=params,
        horizon=horizon,
        hit_indices=tuple(hits),
        expected=tuple(expected),
        matches=hits == expected,
        ap_expressible=_eventually_periodic(indicator, horizon),
    )


# -- recurrence fitting -------------------------------------------------------

@dataclass(frozen=True)
class RecurrenceFit:
    """Outcome of fitting P_n = G_0(n) + sum_{j=1..order} G_j(n) P_{n-j}.

    On "fit": coefficients[j] lists G_j's coefficients (constant term first),
    exact rationals, validated by direct substitution over the whole window;
    dimension is the solution-space dimension. On "refuted": witness_end is
    the end of the minimal inconsistent window prefix and certificate the row
    combination proving inconsistency.
    """

    order: int
    degree: int
    window: tuple[int, int]
    status: str
    coefficients: tuple[tuple[Fraction, ...], ...] | None
    dimension: int | None
    witness_end: int | None
    certificate: tuple[Fraction, ...] | None


def _sequence_values(params: LucasParams, lo: int, hi: int) -> dict[int, int]:
    """P_n(s, t) for lo <= n <= hi; the t = 0 path uses the closed profile."""
    if params.t == 0:
        return {
            n: 1 if n == 1 else params.s ** euler_phi(n) for n in range(lo, hi + 1)
        }
    return {n: atom_eval(n, params) for n in range(lo, hi + 1)}


def recurrence_row(
    values: dict[int, int], n: int, order: int, degree: int
) -> tuple[list[int], int]:
    """One linear equation at index n: unknowns ordered G_0 c_0..c_D, G_1 c_0..c_D, ...

    The unknown (j, r) multiplies n^r (j = 0) or n^r * P_{n-j} (j >= 1);
    the right-hand side is P_n.
    """
    powers = [n**r for r in range(degree + 1)]
    row: list[int] = list(powers)
    for j in range(1, order + 1):
        row.extend(powers[r] * values[n - j] for r in range(degree + 1))
    return row, values[n]


def fit_recurrence(
    params: LucasParams, order: int, degree: int, n_start: int, n_end: int
) -> RecurrenceFit:
    """Fit or refute a polynomial recurrence on the window n_start..n_end."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if n_start <= order:
        raise ValueError("window must start above the recurrence order")
    unknowns = (order + 1) * (degree + 1)
    if n_end - n_start + 1 < 2 * unknowns:
        raise ValueError(
            f"window too short: need at least {2 * unknowns} equations"
        )
    values = _sequence_values(params, n_start - order, n_end)
    rows: list[list[int]] = []
    rhs: list[int] = []
    result = None
    for n in range(n_start, n_end + 1):
        row, b = recurrence_row(values, n, order, degree)
        rows.append(row)
        rhs.append(b)
        result = solve_rational(rows, rhs)
        if result.status == "inconsistent":
            return RecurrenceFit(
                order=order,
                degree=degree,
                window=(n_start, n_end),
                status="refuted",
                coefficients=None,
                dimension=None,
                witness_end=n,
                certificate=result.certificate,
            )
    assert result is not None and result.solution is not None
    coeffs = tuple(
        tuple(result.solution[j * (degree + 1) + r] for r in range(degree + 1))
        for j in range(order + 1)
    )
    for n in range(n_start, n_end + 1):  # re-validate before reporting
        total = sum(coeffs[0][r] * n**r for r in range(degree + 1))
        for j in range(1, order + 1):
            gj = sum(coeffs[j][r] * n**r for r in range(degree + 1))
            total += gj * values[n - j]
        if total != values[n]:
            raise InternalConsistencyError(
                f"fitted recurrence fails direct validation at n={n}"
            )
    return RecurrenceFit(
        order=order,
        degree=degree,
        window=(n_start, n_end),
        status="fit",
        coefficients=coeffs,
        dimension=result.dimension,
        witness_end=None,
        certificate=None,
    )


# -- the t = 0 profile ---------------------------------------------------------

_T_ZERO_CHECK_LIMIT = 200
_t_zero_checked_up_to = 1


def t_zero_profile(s: int, horizon: int) -> list[tuple[int, int]]:
    """(n, P_n(s, 0)) for 1 <= n <= horizon: 1, then s^phi(n).

    The closed values are cross-checked symbolically against the atoms with t
    set to zero for indices up to 200.
    """
    global _t_zero_checked_up_to
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    out = [(1, 1)] + [
        (n, s ** euler_phi(n)) for n in range(2, horizon + 1)
    ]
    check_to = min(horizon, _T_ZERO_CHECK_LIMIT)
    if check_to > _t_zero_checked_up_to:
        s_var, zero = BiPoly.var_s(), BiPoly.zero()
        for n in range(2, check_to + 1):
            reduced = atom(n).subs(s_var, zero)
            if reduced != BiPoly.monomial(euler_phi(n), 0):
                raise InternalConsistencyError(
                    f"atom at t = 0 is not s^phi at index {n}"
                )
        _t_zero_checked_up_to = check_to
    return out
