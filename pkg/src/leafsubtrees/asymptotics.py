"""Growth constants of polynomial count recurrences, to arbitrary precision.

The complete d-ary count recursion N_h = -N_{h-1} + C(N_{h-1} + d, d) is a
polynomial recurrence A_h = sum(a_k * A_{h-1}**k) with nonnegative rational
coefficients.  Such a sequence satisfies an exact telescoped identity for
log(A_n) and grows like a_d**(-1/(d-1)) * kappa**(d**n) for a constant
kappa > 1 that this module evaluates with a rigorous truncation bound:

    kappa = exp(log(A_0) + log(a_d)/(d-1) + K),
    K     = sum over j >= 0 of d**(-1-j) * log(A_{j+1} / (a_d * A_j**d)),

where every series term is computed from the exact integer/rational
sequence, so the only error sources are the tail (bounded explicitly) and
mpmath rounding at the working precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv, mp, mpf

from .errors import PrecisionExhaustedError, ResourceLimitError
from .formulas import complete_dary_sequence

GUARD_DIGITS = 15
MIN_SERIES_TERMS = 4
MAX_SERIES_TERMS = 10_000
MAX_FLOOR_DIGITS = 2_000_000


def _log_fraction(x: Fraction) -> mpf:
    return mp.log(mpf(x.numerator)) - mp.log(mpf(x.denominator))


@dataclass(frozen=True)
class PolyRecurrence:
    """A_n = sum(a_k * A_{n-1}**k) with a_k >= 0, top coefficient positive."""

    coefficients: tuple[Fraction, ...]  # a_0 .. a_d, low to high
    initial: Fraction

    def __post_init__(self) -> None:
        if len(self.coefficients) < 3:
            raise ValueError("recurrence degree must be at least 2")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonnegative")
        if self.coefficients[-1] <= 0:
            raise ValueError("leading coefficient must be positive")
        if self.initial <= 0:
            raise ValueError("initial value must be positive")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def step(self, value: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def iterate(self, n: int) -> list[Fraction]:
        """Exact values [A_0, ..., A_n]."""
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        seq = [self.initial]
        for _ in range(n):
            seq.append(self.step(seq[-1]))
        return seq


def complete_dary_recurrence(d: int) -> PolyRecurrence:
    """Polynomial form of the complete d-ary count recursion.

    Expands -A + C(A + d, d) = sum(a_k * A**k); the coefficients satisfy
    a_0 = 1, a_d = 1/d!, and sum(a_k) = d.
    """
    if d <= 1:
        raise ValueError(f"need d >= 2, got {d}")
    poly = [1]  # product of (A + i), low to high
    for i in range(1, d + 1):
        nxt = [0] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k] += c * i
            nxt[k + 1] += c
        poly = nxt
    fact = math.factorial(d)
    poly[1] -= fact  # subtract the d! * A term
    return PolyRecurrence(tuple(Fraction(c, fact) for c in poly), Fraction(1))


def log_closed_form(rec: PolyRecurrence, n: int, digits: int = 40) -> mpf:
    """Telescoped closed expression for log(A_n).

    Evaluates (d**n - 1)/(d-1) * log(a_d)
      + d**n * (log(A_0) + sum_{j<n} d**(-1-j) * log(1 + sum_{k<d} (a_k/a_d) * A_j**(k-d)))
    at the requested precision; callers compare it against the log of the
    directly iterated value.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    d = rec.degree
    a = rec.coefficients
    seq = rec.iterate(n - 1)
    with mp.workdps(digits + GUARD_DIGITS):
        total = mp.mpf(0)
        for j in range(n):
            # 1 + sum_k (a_k/a_d) A_j^(k-d), assembled as a single exact
            # fraction (Horner numerator over a_d * A_j^d) to avoid
            # reducing d separate huge-denominator fractions
            low = Fraction(0)
            for k in range(d - 1, -1, -1):
                low = low * seq[j] + a[k]
            one_plus = 1 + low / (a[-1] * seq[j] ** d)
            total += mpf(d) ** (-1 - j) * _log_fraction(one_plus)
        dn = mpf(d) ** n
        return (
            (dn - 1) / (d - 1) * _log_fraction(a[-1])
            + dn * (_log_fraction(rec.initial) + total)
        )


@dataclass(frozen=True)
class KappaResult:
    """Growth constant of a polynomial recurrence with its error budget."""

    degree: int
    digits: int
    kappa: mpf
    log_kappa: mpf
    K: mpf
    terms_used: int
    tail_bound: mpf


def growth_constant(
    rec: PolyRecurrence, digits: int = 16, *, min_terms: int = MIN_SERIES_TERMS
) -> KappaResult:
    """Evaluate the growth constant so that A_n ~ a_d**(-1/(d-1)) * kappa**(d**n).

    The series for K is truncated once the explicit tail bound
    d**(-n)/(d-1) * log(A_{n+1}/(a_d * A_n**d)) drops below
    10**-(digits + 5); all omitted terms are nonnegative, so the reported
    value never overshoots by more than the bound.
    """
    if digits < 1:
        raise ValueError(f"need digits >= 1, got {digits}")
    if min_terms < 1:
        raise ValueError(f"need min_terms >= 1, got {min_terms}")
    d = rec.degree
    with mp.workdps(digits + GUARD_DIGITS):
        tol = mpf(10) ** (-(digits + 5))
        seq = [rec.initial]

        def extend(upto: int) -> None:
            while len(seq) <= upto:
                nxt = rec.step(seq[-1])
                if nxt <= seq[-1]:
                    raise ValueError(
                        "growth constant needs a strictly increasing sequence; "
                        f"A_{len(seq) - 1} = {seq[-1]} but A_{len(seq)} = {nxt}"
                    )
                seq.append(nxt)

        def term(j: int) -> mpf:
            extend(j + 1)
            return (
                _log_fraction(seq[j + 1])
                - d * _log_fraction(seq[j])
                - _log_fraction(rec.coefficients[-1])
            )

        K = mp.mpf(0)
        n = 0
        while True:
            K += mpf(d) ** (-1 - n) * term(n)
            n += 1
            tail = mpf(d) ** (-n) / (d - 1) * term(n)
            if n >= min_terms and tail < tol:
                break
            if n >= MAX_SERIES_TERMS:
                raise PrecisionExhaustedError(
                    f"series did not meet the tail tolerance within "
                    f"{MAX_SERIES_TERMS} terms"
                )
        log_kappa = (
            _log_fraction(rec.initial)
            + _log_fraction(rec.coefficients[-1]) / (d - 1)
            + K
        )
        result = KappaResult(
            degree=d,
            digits=digits,
            kappa=mp.exp(log_kappa),
            log_kappa=log_kappa,
            K=K,
            terms_used=n,
            tail_bound=tail,
        )
    if not result.kappa > 1:
        raise ValueError("increasing unbounded sequence must give kappa > 1")
    return result


@lru_cache(maxsize=128)
def kappa(d: int, digits: int = 16) -> KappaResult:
    """Growth constant of the complete d-ary induced-subtree counts."""
    if d <= 1:
        raise ValueError(f"need d >= 2, got {d}")
    return growth_constant(complete_dary_recurrence(d), digits)


def _magnitude_digits(d: int, h: int) -> int:
    """Rough decimal size of d!**(1/(d-1)) * kappa(d)**(d**h)."""
    probe = kappa(d, 20)
    with mp.workdps(30):
        m = (
            mp.log(mpf(math.factorial(d)), 10) / (d - 1)
            + mpf(d) ** h * probe.log_kappa / mp.log(10)
        )
        return max(0, int(m)) + 1


def floor_formula(
    d: int, h: int, *, digits: int | None = None, max_attempts: int = 5
) -> int:
    """floor(d!**(1/(d-1)) * kappa(d)**(d**h)), resolved rigorously.

    The working precision starts just above the value's decimal magnitude
    and doubles (up to 16x) until the fractional part is separated from both
    0 and 1 by more than the evaluation error, so a floor is never taken on
    an unresolved near-integer.
    """
    if d <= 1:
        raise ValueError(f"need d >= 2, got {d}")
    if h < 0:
        raise ValueError(f"need h >= 0, got {h}")
    magnitude = _magnitude_digits(d, h)
    if magnitude > MAX_FLOOR_DIGITS:
        raise ResourceLimitError(
            f"floor expression for d={d}, h={h} has about {magnitude} decimal "
            f"digits, beyond the {MAX_FLOOR_DIGITS}-digit cap"
        )
    precision = digits if digits is not None else magnitude + 25
    fact = math.factorial(d)
    for _ in range(max_attempts):
        kr = kappa(d, precision)
        with mp.workdps(precision + GUARD_DIGITS):
            dh = mpf(d) ** h
            logx = mp.log(mpf(fact)) * (1 - dh) / (d - 1) + dh * kr.K
            ulp = mpf(10) ** (-(precision + GUARD_DIGITS - 8))
            err = dh * kr.tail_bound * mpf("1.01") + (abs(logx) + 1) * ulp
            if err < mpf("0.5"):
                x = mp.exp(logx)
                xerr = x * mp.expm1(err) * mpf("1.01")
                f = mp.floor(x)
                if x - f > xerr and f + 1 - x > xerr:
                    return int(f)
        precision *= 2
    raise PrecisionExhaustedError(
        f"could not separate the fractional part of the floor expression for "
        f"d={d}, h={h} at up to {precision // 2} digits"
    )


@dataclass(frozen=True)
class FloorMatch:
    h: int
    floor_value: int
    exact_value: int

    @property
    def match(self) -> bool:
        return self.floor_value == self.exact_value


class FloorThresholdNotFound(LookupError):
    """No height exists below the cap from which the floor expression is exact."""

    def __init__(self, d: int, h_max: int, rows: list[FloorMatch]):
        self.d = d
        self.h_max = h_max
        self.rows = rows
        mismatches = [r.h for r in rows if not r.match]
        super().__init__(
            f"floor expression never settles for d={d} up to h={h_max}; "
            f"mismatches at h in {mismatches}"
        )


def floor_match_table(d: int, h_max: int) -> list[FloorMatch]:
    """Compare the floor expression with the exact recursion for h = 0..h_max."""
    exact = complete_dary_sequence(d, h_max)
    return [FloorMatch(h, floor_formula(d, h), exact[h]) for h in range(h_max + 1)]


def floor_threshold(d: int, h_max: int) -> int:
    """Smallest H with floor_formula(d, h) exact for every H <= h <= h_max."""
    if h_max < 2:
        raise ValueError(f"need h_max >= 2, got {h_max}")
    rows = floor_match_table(d, h_max)
    threshold = None
    for row in reversed(rows):
        if not row.match:
            break
        threshold = row.h
    if threshold is None:
        raise FloorThresholdNotFound(d, h_max, rows)
    return threshold


@dataclass(frozen=True)
class KappaBound:
    d: int
    kappa: mpf
    upper_bound: mpf  # d**(1/(d-1))
    margin: mpf

    @property
    def ok(self) -> bool:
        return self.margin > 0 and self.kappa > 1


def kappa_bounds(d_max: int, digits: int = 30) -> list[KappaBound]:
    """Check 1 < kappa(d) <= d**(1/(d-1)) for every d up to d_max.

    The comparison inflates kappa by its tail bound first, so a reported
    pass is rigorous up to mpmath rounding at the working precision.
    """
    if d_max < 2:
        raise ValueError(f"need d_max >= 2, got {d_max}")
    rows = []
    for d in range(2, d_max + 1):
        kr = kappa(d, digits)
        with mp.workdps(digits + GUARD_DIGITS):
            upper = mpf(d) ** (mpf(1) / (d - 1))
            kappa_high = kr.kappa * mp.exp(kr.tail_bound)
            rows.append(KappaBound(d, kr.kappa, upper, upper - kappa_high))
    return rows


@dataclass(frozen=True)
class GrowthStep:
    """Certified inequalities linking consecutive complete d-ary counts."""

    h: int
    exact: bool  # exact integers, or outward-rounded interval arithmetic
    increasing: bool  # N_h > N_{h-1}
    weighted_growth: bool  # d! * N_h > N_{h-1}**d
    ratio_at_most_d: bool  # N_h <= d * N_{h-1}**d


def growth_certificate(
    d: int,
    h_max: int,
    *,
    exact_digit_limit: int = 200_000,
    interval_dps: int = 60,
) -> list[GrowthStep]:
    """Certify growth inequalities for N_1..N_{h_max} of the complete d-ary family.

    Steps whose values fit under ``exact_digit_limit`` decimal digits are
    checked with exact integers.  Beyond that the sequence is continued with
    outward-rounded interval arithmetic seeded from the last exact value, so
    every reported True is still a sound certificate (intervals are compared
    endpoint-to-endpoint).
    """
    if d <= 1:
        raise ValueError(f"need d >= 2, got {d}")
    fact = math.factorial(d)
    steps: list[GrowthStep] = []
    prev = 1
    h = 1
    while h <= h_max:
        if prev.bit_length() * d * 0.30103 > exact_digit_limit:
            break
        cur = -prev + math.comb(prev + d, d)
        power = prev**d
        steps.append(
            GrowthStep(
                h=h,
                exact=True,
                increasing=cur > prev,
                weighted_growth=fact * cur > power,
                ratio_at_most_d=cur <= d * power,
            )
        )
        prev = cur
        h += 1
    if h <= h_max:
        # d! * N_h and N_{h-1}**d agree to relative O(1/N), which no fixed
        # working precision can separate by subtraction; instead evaluate
        # d! * N_h - N_{h-1}**d through its expansion, whose N**d terms
        # cancel exactly and whose remaining coefficients are all positive
        # (the linear one is d! * (H_d - 1) > 0), so no cancellation occurs.
        expansion = [1]  # product of (N + i), low-order first
        for i in range(1, d + 1):
            nxt = [0] * (len(expansion) + 1)
            for k, c in enumerate(expansion):
                nxt[k] += c * i
                nxt[k + 1] += c
            expansion = nxt
        gap_coeffs = expansion[:d]
        gap_coeffs[1] -= fact
        assert all(c > 0 for c in gap_coeffs)
        saved = iv.dps
        iv.dps = interval_dps
        try:
            v_prev = iv.mpf(prev)
            while h <= h_max:
                prod = iv.mpf(1)
                for i in range(1, d + 1):
                    prod = prod * (v_prev + i)
                v = prod / fact - v_prev
                power = v_prev**d
                gap = iv.mpf(0)
                for c in reversed(gap_coeffs):
                    gap = gap * v_prev + c
                steps.append(
                    GrowthStep(
                        h=h,
                        exact=False,
                        increasing=v.a > v_prev.b,
                        weighted_growth=gap.a > 0,
                        ratio_at_most_d=v.b <= (d * power).a,
                    )
                )
                v_prev = v
                h += 1
        finally:
            iv.dps = saved
    return steps
