"""Finite-size evaluation of the cycle-count bound expressions and exact
inequality checks between Turán-graph cycle and Hamilton counts.

Asymptotic statements carry unspecified constants; the reports here expose
the constant-free expressions and certify only inequalities whose two sides
are exact (integers, rationals, or transcendental factors replaced by
directed rational bounds rounded against the inequality).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import mpmath as mp

from .analytic import (
    _hamilton_sorted,
    bipartite_cycle_counts,
    cycle_spectrum_multipartite,
)
from .graphs import falling_factorial, turan_class_sizes, turan_edge_count

WORK_DPS = 60
PATH_BOUND_CAP = 14


def _tk(t: int, k: int) -> int:
    """Edge count of the k-class Turán graph on t vertices (complete for t <= k)."""
    if t <= 1:
        return 0
    return turan_edge_count(t, min(k, t))


def _balanced_hamilton(n: int, k: int) -> int:
    # T_k(n) degenerates to the complete graph when n <= k
    return _hamilton_sorted(tuple(sorted(turan_class_sizes(n, min(k, n)))))


def _ln(value) -> float | None:
    """Natural log as a float, exact-input safe for huge ints and Fractions."""
    with mp.workdps(WORK_DPS):
        if isinstance(value, Fraction):
            if value <= 0:
                return None
            return float(mp.log(mp.mpf(value.numerator)) - mp.log(mp.mpf(value.denominator)))
        if isinstance(value, int):
            if value <= 0:
                return None
            return float(mp.log(mp.mpf(value)))
        v = mp.mpf(value)
        return float(mp.log(v)) if v > 0 else None


def exp_bounds(x: Fraction, terms: int = 40) -> tuple[Fraction, Fraction]:
    """Rational lower and upper bounds for e^x, x >= 0, via the Taylor tail.

    The lower bound is the partial sum; the upper bound adds the geometric
    majorant of the tail (requires x < terms + 2).
    """
    if x < 0:
        raise ValueError("nonnegative arguments only")
    if x >= terms + 2:
        raise ValueError("increase terms: tail majorant needs x < terms + 2")
    term = Fraction(1)
    partial = Fraction(1)
    for i in range(1, terms + 1):
        term *= Fraction(x, i)
        partial += term
    tail = term * Fraction(x, terms + 1) / (1 - Fraction(x, terms + 2))
    return partial, partial + tail


@dataclass
class BoundReport:
    """One evaluated inequality or ratio: lhs `direction` rhs.

    ``holds`` is None for report-only quantities (no inequality asserted).
    """

    name: str
    params: dict
    lhs: object
    rhs: object
    direction: str = "<="
    lhs_log: float | None = None
    rhs_log: float | None = None
    holds: bool | None = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "direction": self.direction,
            "lhs_log": self.lhs_log,
            "rhs_log": self.rhs_log,
            "holds": self.holds,
            "detail": {k: str(v) for k, v in self.detail.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    CSV_HEADER = "name,n,m,k,i,lhs_log,rhs_log,holds"

    def to_csv_row(self) -> str:
        cells = [self.name]
        for key in ("n", "m", "k", "i"):
            cells.append(str(self.params.get(key, "")))
        cells.append("" if self.lhs_log is None else repr(self.lhs_log))
        cells.append("" if self.rhs_log is None else repr(self.rhs_log))
        cells.append("" if self.holds is None else str(self.holds).lower())
        return ",".join(cells)


# ---------------------------------------------------------------------------
# Closed-form bound expressions
# ---------------------------------------------------------------------------


def lambda_param(n: int, m: int, k: int) -> mp.mpf:
    """The decay parameter 1 - sqrt(1 - (2k/(k-1)) m/(n-3)^2), at 60 digits.

    The radicand's sign is decided exactly in rational arithmetic before any
    rounding; a negative radicand is an error.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    if m == 0:
        return mp.mpf(0)
    if n <= 3:
        raise ValueError("need n >= 4 when m > 0")
    radicand = 1 - Fraction(2 * k, k - 1) * Fraction(m, (n - 3) ** 2)
    if radicand < 0:
        raise ValueError(f"negative radicand for (n={n}, m={m}, k={k}): m too large")
    with mp.workdps(WORK_DPS):
        root = mp.sqrt(mp.mpf(radicand.numerator) / mp.mpf(radicand.denominator))
        return 1 - root


def hfree_cycle_bound_log(n: int, m: int, k: int) -> mp.mpf:
    """ln of lambda^n n^(n+2) ((k-1)/k)^n e^((2k-1)/((k-1)lambda) - lambda n).

    The multiplicative constant of the underlying O(.) is unconstrained and
    excluded.  Diverges as lambda -> 0, which is reported as an error.
    """
    lam = lambda_param(n, m, k)
    if lam == 0:
        raise ValueError("lambda = 0: bound expression diverges")
    with mp.workdps(WORK_DPS):
        return (
            n * mp.log(lam)
            + (n + 2) * mp.log(n)
            + n * mp.log(mp.mpf(k - 1) / k)
            + mp.mpf(2 * k - 1) / ((k - 1) * lam)
            - lam * n
        )


def chromatic_cycle_bound_log(n: int, k: int, eps: float) -> mp.mpf:
    """ln of ((k-1)/k)^n n^(n+3) e^(eps n + sqrt(n) - n); constant excluded."""
    if not 0 < eps < 1:
        raise ValueError("eps must lie strictly between 0 and 1")
    if n < 4:
        raise ValueError("need n >= 4")
    if k < 2:
        raise ValueError("k must be >= 2")
    with mp.workdps(WORK_DPS):
        return (
            n * mp.log(mp.mpf(k - 1) / k)
            + (n + 3) * mp.log(n)
            + mp.mpf(eps) * n
            + mp.sqrt(mp.mpf(n))
            - n
        )


# ---------------------------------------------------------------------------
# Path-product optimizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalFunction:
    """Edge-maximum table t -> ex(t) for t = 2..t_max, with provenance."""

    values: tuple[int, ...]
    provenance: str = "user-supplied"

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("empty table")
        prev = 0
        for off, val in enumerate(self.values):
            t = off + 2
            if val < prev:
                raise ValueError(f"table not nondecreasing at t={t}")
            if val > comb(t, 2):
                raise ValueError(f"ex({t}) exceeds C({t},2)")
            prev = val

    @property
    def t_max(self) -> int:
        return len(self.values) + 1

    def value(self, t: int) -> int:
        if not 2 <= t <= self.t_max:
            raise ValueError(f"t={t} outside table range 2..{self.t_max}")
        return self.values[t - 2]

    @classmethod
    def turan_formula(cls, k: int, t_max: int) -> "ExtremalFunction":
        """ex(t) = edge count of the k-class Turán graph (exact for complete
        forbidden graphs on k+1 vertices, by Turán's theorem)."""
        return cls(tuple(_tk(t, k) for t in range(2, t_max + 1)), provenance="formula")


def path_bound_exhaustive(
    n: int, m: int, exf: ExtremalFunction, *, max_n: int = PATH_BOUND_CAP
) -> int:
    """Exact maximum of prod_{i=2..n} max(r_i, 1) over nonnegative integer
    sequences with sum <= m and every prefix sum_{i=2..t} r_i <= ex(t).

    Memoized on (position, budget used); position caps come from the prefix
    constraints, so the state space is tiny at desk scale.
    """
    if n > max_n:
        raise ValueError(f"exhaustive optimizer capped at {max_n}")
    if n < 2:
        return 1
    if exf.t_max < n:
        raise ValueError("extremal table too short for n")
    memo: dict[tuple[int, int], int] = {}

    def best(i: int, used: int) -> int:
        if i > n:
            return 1
        key = (i, used)
        if key in memo:
            return memo[key]
        cap = min(exf.value(i) - used, m - used)
        out = 0
        for r in range(cap + 1):
            out = max(out, max(r, 1) * best(i + 1, used + r))
        memo[key] = out
        return out

    return best(2, 0)


@dataclass(frozen=True)
class StructuredBound:
    """Value of the structured candidate sequence for the path-product bound."""

    value: Fraction
    flat_start: int | None  # position I where the flat tail begins
    truncated: bool  # budget too small for the full structure


def path_bound_structured(n: int, m: int, k: int, n0: int) -> StructuredBound:
    """Product value of the structured sequence: a constant head of value
    t_k(n0)/(n0-1) on positions 2..n0, Turán edge increments on positions
    n0+1..I, and a flat tail in {r_I, r_I+1} consuming the rest of m.

    If the budget cannot fund the structure, the feasible truncation is
    returned with ``truncated=True``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 2 <= n0 < n:
        raise ValueError("need 2 <= n0 < n")
    if m < 0:
        raise ValueError("budget must be nonnegative")
    head = Fraction(_tk(n0, k), n0 - 1)
    head_value = max(head, Fraction(1)) ** (n0 - 1)
    if m < _tk(n0, k):
        q = Fraction(m, n0 - 1)
        return StructuredBound(max(q, Fraction(1)) ** (n0 - 1), None, True)

    increments = {i: _tk(i, k) - _tk(i - 1, k) for i in range(n0 + 1, n + 1)}
    flat_start = None
    for cand in range(n0 + 1, n + 1):
        if _tk(cand, k) + (n - cand) * increments[cand] <= m:
            flat_start = cand
        else:
            break

    if flat_start is None:
        # head fits but no increment step does: spread the leftover evenly
        budget = m - _tk(n0, k)
        slots = n - n0
        base, extras = divmod(budget, slots)
        value = head_value
        value *= max(base, 1) ** (slots - extras) * max(base + 1, 1) ** extras
        return StructuredBound(value, None, True)

    i_pos = flat_start
    value = head_value
    for i in range(n0 + 1, i_pos + 1):
        value *= increments[i]
    r_flat = increments[i_pos]
    tail = n - i_pos
    if tail:
        extras = min(tail, m - _tk(i_pos, k) - tail * r_flat)
        value *= r_flat ** (tail - extras) * (r_flat + 1) ** extras
    if m <= _tk(n, k) - 10 * n and i_pos > n - 2:
        raise ArithmeticError(
            f"flat tail should start by n-2 when m <= t_k(n) - 10n (got I={i_pos})"
        )
    return StructuredBound(value, i_pos, False)


# ---------------------------------------------------------------------------
# Exact inequality checks
# ---------------------------------------------------------------------------


def check_recursion(n: int, k: int, i: int) -> BoundReport:
    """h(T_k(n)) >= (n-1)_i ((k-2)/k)^i h(T_k(n-i)), exact in rationals."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if i < 0 or n - i < 3:
        raise ValueError("need i >= 0 and n - i >= 3")
    lhs = _balanced_hamilton(n, k)
    rhs = Fraction(
        falling_factorial(n - 1, i) * (k - 2) ** i * _balanced_hamilton(n - i, k),
        k**i,
    )
    return BoundReport(
        name="recursion",
        params={"n": n, "k": k, "i": i},
        lhs=lhs,
        rhs=rhs,
        direction=">=",
        lhs_log=_ln(lhs),
        rhs_log=_ln(rhs),
        holds=lhs >= rhs,
    )


def check_total_to_hamilton(n: int, k: int) -> BoundReport:
    """c(T_k(n)) <= e^(2k/(k-2)) h(T_k(n)); the factor is rounded down so a
    True verdict is rigorous."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if n < 3:
        raise ValueError("need n >= 3")
    spectrum = cycle_spectrum_multipartite(turan_class_sizes(n, min(k, n)))
    total = sum(spectrum.values())
    ham = _balanced_hamilton(n, k)
    lo, hi = exp_bounds(Fraction(2 * k, k - 2))
    rhs = lo * ham
    return BoundReport(
        name="secondcount",
        params={"n": n, "k": k},
        lhs=total,
        rhs=rhs,
        direction="<=",
        lhs_log=_ln(total),
        rhs_log=_ln(rhs),
        holds=total <= rhs,
        detail={"factor_lower": lo, "factor_upper": hi, "hamilton": ham},
    )


def check_bipartite_decay(n: int, i: int) -> BoundReport:
    """c(T_2(n-i)) <= 2e (4/n)^i c_{2 floor(n/2)}(T_2(n)), e rounded down."""
    if i < 0 or n - i < 4:
        raise ValueError("need i >= 0 and n - i >= 4")
    _, lhs = bipartite_cycle_counts(n - i)
    spectrum, _ = bipartite_cycle_counts(n)
    top = spectrum[2 * (n // 2)]
    e_lo, e_hi = exp_bounds(Fraction(1))
    rhs = 2 * e_lo * Fraction(4, n) ** i * top
    return BoundReport(
        name="second2count",
        params={"n": n, "i": i},
        lhs=lhs,
        rhs=rhs,
        direction="<=",
        lhs_log=_ln(lhs),
        rhs_log=_ln(rhs),
        holds=lhs <= rhs,
        detail={"e_lower": e_lo, "e_upper": e_hi, "top_count": top},
    )


def report_asymptotic_ratio(n: int, k: int) -> BoundReport:
    """Exact count divided by its asymptotic form; reported, never asserted.

    k = 2: longest even cycle count of T_2(n) against pi 2^-n n^n e^-n.
    k >= 3: h(T_k(n)) against ((k-1)/k)^n n^(n-1/2) e^-n.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    with mp.workdps(WORK_DPS):
        if k == 2:
            spectrum, _ = bipartite_cycle_counts(n)
            exact = spectrum[2 * (n // 2)]
            denom_log = mp.log(mp.pi) - n * mp.log(2) + n * mp.log(n) - n
            name = "kkmain-bipartite"
        elif k >= 3:
            exact = _balanced_hamilton(n, k)
            denom_log = (
                n * mp.log(mp.mpf(k - 1) / k) + (n - mp.mpf(1) / 2) * mp.log(n) - n
            )
            name = "kkmain-hamilton"
        else:
            raise ValueError("k must be >= 2")
        ratio = mp.exp(mp.log(mp.mpf(exact)) - denom_log)
    return BoundReport(
        name=name,
        params={"n": n, "k": k},
        lhs=exact,
        rhs=mp.nstr(mp.exp(denom_log), 30),
        direction="ratio",
        lhs_log=_ln(exact),
        rhs_log=float(denom_log),
        holds=None,
        detail={"ratio": float(ratio)},
    )
