"""Numerical summation of generalized hypergeometric series.

sum_pfq evaluates pFq(upper; lower; z) by direct term recurrence
(t_{n+1}/t_n = z * prod(upper_j + n) / (prod(lower_k + n) * (n + 1))).
At unit argument the series with p = q + 1 converge only algebraically
(term magnitudes ~ n^{-1-s} with s = Re(sum(lower) - sum(upper))), so
sum_pfq_unit accelerates the partial sums with a Levin u-transform.

The u-transform itself is evaluated in exact rational arithmetic on the
binary64 terms: at transform order k the alternating binomial weights
cancel ~k digits, which at k = 20 would otherwise consume most of a
binary64 significand.  Exact evaluation leaves only the transform's model
truncation error, which the consecutive-order differences estimate
faithfully.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import DivergentError, InsufficientTermsError, PoleError, RangeError

_EPS = 2.220446049250313e-16

# Parameters within this distance of a non-positive integer are treated as
# exactly polynomial-truncating (upper) or as pole-hitting (lower).
NEAR_INT_TOLERANCE = 1e-9

LEVIN_MAX_ORDER = 20
_LEVIN_WINDOW = 21          # window of terms per transform base
_LEVIN_SAFETY = 4.0         # multiplier on the raw error estimate


class SumStatus(Enum):
    CONVERGED = "Converged"
    TRUNCATED = "Truncated"
    MAX_TERMS_EXCEEDED = "MaxTermsExceeded"
    DIVERGENT = "Divergent"


def _nearest_nonpositive_int(z: complex, tol: float) -> int | None:
    k = round(z.real)
    if k <= 0 and abs(z - k) <= tol:
        return k
    return None


@dataclass(frozen=True)
class SeriesSpec:
    """One pFq evaluation: upper parameter list, lower parameter list, argument."""

    upper: tuple[complex, ...]
    lower: tuple[complex, ...]
    argument: complex

    def __init__(self, upper, lower, argument):
        object.__setattr__(self, "upper", tuple(complex(a) for a in upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in lower))
        object.__setattr__(self, "argument", complex(argument))
        self._validate()

    def _validate(self) -> None:
        p, q = len(self.upper), len(self.lower)
        if p > q + 1:
            raise ValueError(f"p = {p} > q + 1 = {q + 1}: series diverges for z != 0")
        trunc = self.truncation_degree()
        for b in self.lower:
            k = _nearest_nonpositive_int(b, NEAR_INT_TOLERANCE)
            if k is None:
                continue
            # A non-positive-integer lower parameter is tolerable only when an
            # upper parameter truncates the series strictly before the lower
            # Pochhammer factor hits zero (term index -k, truncation at -a < -k).
            if trunc is None or trunc >= -k:
                raise PoleError(
                    f"lower parameter {b} is within {NEAR_INT_TOLERANCE} of a "
                    "non-positive integer and no upper parameter truncates first"
                )

    def truncation_degree(self) -> int | None:
        """Highest term index kept when an upper parameter is a non-positive
        integer (the series is then a polynomial of that degree); None when
        no upper parameter truncates."""
        degrees = []
        for a in self.upper:
            k = _nearest_nonpositive_int(a, NEAR_INT_TOLERANCE)
            if k is not None:
                degrees.append(-k)
        return min(degrees) if degrees else None

    def convergence_parameter(self) -> float:
        """s = Re(sum(lower) - sum(upper)); at z=1 a p = q+1 series converges
        iff s > 0."""
        return (sum(self.lower) - sum(self.upper)).real


@dataclass(frozen=True)
class SumPolicy:
    tolerance: float = 1e-13
    max_terms: int = 10**6
    unit_argument_mode: str = "accelerate"   # "accelerate" | "reject"

    def __post_init__(self):
        if not (self.tolerance >= 1e-15):
            raise ValueError("tolerance must be >= 1e-15")
        if self.max_terms < 10:
            raise ValueError("max_terms must be >= 10")
        if self.unit_argument_mode not in ("accelerate", "reject"):
            raise ValueError("unit_argument_mode must be 'accelerate' or 'reject'")


@dataclass(frozen=True)
class SumResult:
    value: complex
    terms_used: int
    tail_estimate: float
    status: SumStatus


class _TermGenerator:
    """Running-term recurrence; avoids recomputing Pochhammer products."""

    def __init__(self, spec: SeriesSpec):
        self.upper = spec.upper
        self.lower = spec.lower
        self.z = spec.argument
        self.terms: list[complex] = [1.0 + 0.0j]

    def extend(self, count: int) -> None:
        terms = self.terms
        n = len(terms) - 1
        t = terms[-1]
        while len(terms) < count:
            num = 1.0 + 0.0j
            for a in self.upper:
                num *= a + n
            den = (n + 1) + 0.0j
            for b in self.lower:
                den *= b + n
            t = t * self.z * num / den
            terms.append(t)
            n += 1


def _direct_sum(spec: SeriesSpec, policy: SumPolicy) -> SumResult:
    """Plain term-by-term accumulation; used away from the unit circle and
    for polynomial (truncating) series."""
    tol = policy.tolerance
    trunc = spec.truncation_degree()
    gen = _TermGenerator(spec)
    total = 0.0 + 0.0j
    small_streak = 0
    n = 0
    ratio = 0.0
    prev_abs = 1.0
    while True:
        gen.extend(n + 1)
        t = gen.terms[n]
        total += t
        if not cmath.isfinite(total):
            raise RangeError("series accumulation overflowed binary64")
        if trunc is not None and n >= trunc:
            # polynomial case: remaining terms vanish (or are negligible for
            # parameters merely near a non-positive integer)
            gen.extend(n + 2)
            tail = abs(gen.terms[n + 1])
            return SumResult(total, n + 1, tail, SumStatus.TRUNCATED)
        abs_t = abs(t)
        if n > 0:
            ratio = min(max(abs_t / prev_abs if prev_abs > 0.0 else 0.0, 0.0), 0.99)
        prev_abs = abs_t
        tail = abs_t / (1.0 - ratio)
        scale = max(1.0, abs(total))
        if abs_t <= tol * scale:
            small_streak += 1
            if small_streak >= 2 and tail <= tol * scale:
                return SumResult(total, n + 1, tail, SumStatus.CONVERGED)
        else:
            small_streak = 0
        n += 1
        if n >= policy.max_terms:
            return SumResult(total, n, tail, SumStatus.MAX_TERMS_EXCEEDED)


# ----------------------------------------------------------------------
# Levin u-transform, exact-rational kernel
# ----------------------------------------------------------------------

def _levin_orders_real(terms: list[float], beta: int = 1,
                       max_order: int = LEVIN_MAX_ORDER) -> list[float] | None:
    """u-transform values for orders 1..K on a real term window, computed in
    exact rational arithmetic.  None when a term is exactly zero (remainder
    estimates omega_n = (beta+n) t_n are then undefined)."""
    fracs = [Fraction(t) for t in terms]
    if any(f == 0 for f in fracs):
        return None
    sums: list[Fraction] = []
    acc = Fraction(0)
    for f in fracs:
        acc += f
        sums.append(acc)
    ratio = [sums[j] / ((beta + j) * fracs[j]) for j in range(len(fracs))]
    recip = [1 / ((beta + j) * fracs[j]) for j in range(len(fracs))]
    out: list[float] = []
    for k in range(1, min(max_order, len(terms) - 1) + 1):
        num = Fraction(0)
        den = Fraction(0)
        for j in range(k + 1):
            w = comb(k, j) * (beta + j) ** (k - 1)
            if j & 1:
                w = -w
            num += w * ratio[j]
            den += w * recip[j]
        if den == 0:
            continue
        out.append(float(num / den))
    return out if out else None


def _levin_orders_complex(terms: list[complex], beta: int = 1,
                          max_order: int = LEVIN_MAX_ORDER) -> list[complex] | None:
    """Complex-term variant of _levin_orders_real (components kept as exact
    Fraction pairs)."""
    re = [Fraction(t.real) for t in terms]
    im = [Fraction(t.imag) for t in terms]
    if any(r == 0 and i == 0 for r, i in zip(re, im)):
        return None
    s_re: list[Fraction] = []
    s_im: list[Fraction] = []
    ar, ai = Fraction(0), Fraction(0)
    for r, i in zip(re, im):
        ar += r
        ai += i
        s_re.append(ar)
        s_im.append(ai)
    ratio: list[tuple[Fraction, Fraction]] = []
    recip: list[tuple[Fraction, Fraction]] = []
    for j in range(len(terms)):
        b = beta + j
        wr, wi = b * re[j], b * im[j]
        norm = wr * wr + wi * wi
        # 1/omega and S/omega via multiplication by conj(omega)/|omega|^2
        recip.append((wr / norm, -wi / norm))
        rr = (s_re[j] * wr + s_im[j] * wi) / norm
        ri = (s_im[j] * wr - s_re[j] * wi) / norm
        ratio.append((rr, ri))
    out: list[complex] = []
    for k in range(1, min(max_order, len(terms) - 1) + 1):
        nr = ni = dr = di = Fraction(0)
        for j in range(k + 1):
            w = comb(k, j) * (beta + j) ** (k - 1)
            if j & 1:
                w = -w
            nr += w * ratio[j][0]
            ni += w * ratio[j][1]
            dr += w * recip[j][0]
            di += w * recip[j][1]
        norm = dr * dr + di * di
        if norm == 0:
            continue
        out.append(complex(float((nr * dr + ni * di) / norm),
                           float((ni * dr - nr * di) / norm)))
    return out if out else None


def _levin_orders(terms: list[complex], beta: int = 1,
                  max_order: int = LEVIN_MAX_ORDER) -> list[complex] | None:
    if all(t.imag == 0.0 for t in terms):
        vals = _levin_orders_real([t.real for t in terms], beta, max_order)
        return None if vals is None else [complex(v) for v in vals]
    return _levin_orders_complex(terms, beta, max_order)


def _pick_transform(values: list[complex]) -> tuple[complex, float] | None:
    """Select the transform order whose two trailing consecutive differences
    are jointly smallest.  A single spuriously small difference between two
    equally wrong orders cannot pass this two-difference consistency check."""
    if len(values) < 3:
        return None
    best: tuple[float, complex] | None = None
    for k in range(2, len(values)):
        score = max(abs(values[k] - values[k - 1]), abs(values[k - 1] - values[k - 2]))
        if best is None or score < best[0]:
            best = (score, values[k])
    if best is None:
        return None
    return best[1], best[0]


def levin_accelerate(terms, beta: float = 1.0,
                     max_order: int = LEVIN_MAX_ORDER) -> tuple[complex, float]:
    """Levin u-transform estimate of sum(terms + tail).

    Returns (value, error_estimate) where the estimate is the difference of
    the last two transform orders used.  Requires at least 8 terms of a
    series whose terms eventually decay smoothly or with constant sign.
    """
    terms = [complex(t) for t in terms]
    if len(terms) < 8:
        raise InsufficientTermsError(
            f"levin_accelerate needs >= 8 terms, got {len(terms)}"
        )
    values = _levin_orders(terms, beta=int(beta), max_order=max_order)
    if values is None:
        raise ValueError("levin_accelerate: zero term in input (omega undefined)")
    picked = _pick_transform(values)
    if picked is None:
        raise InsufficientTermsError("levin_accelerate: too few usable orders")
    value, err = picked
    return value, max(err, 4.0 * _EPS * abs(value))


def _offset_ladder(max_terms: int):
    """Window base offsets: dense first (early-term irregularities such as
    sign changes or initial growth live at small indices), then geometric."""
    m = 0
    while m + _LEVIN_WINDOW <= max_terms:
        yield m
        m = m + 1 if m < 4 else int(m * 1.45) + 2


def _accelerated_unit_sum(spec: SeriesSpec, policy: SumPolicy) -> SumResult:
    """Sum a p = q+1 series at z = 1 by Levin-accelerating term windows at a
    ladder of base offsets.

    Each window yields candidates for two remainder-scale conventions
    (window-local beta = 1 and global beta = base+1; the global scale wins
    on deep windows, the local one on shallow).  A candidate's certificate
    is its two-difference consistency score; the best certificate, times a
    safety factor, is the tail estimate.  Windows over nearly flat tails
    carry no curvature and only get flatter, so two of them in a row end
    the ladder, as does a long run of windows without score improvement.
    """
    tol = policy.tolerance
    gen = _TermGenerator(spec)
    window = _LEVIN_WINDOW
    candidates: list[tuple[float, complex]] = []   # (estimate, value)
    head = 0.0 + 0.0j
    consumed = 0
    flat_streak = 0
    stall = 0
    for offset in _offset_ladder(policy.max_terms):
        gen.extend(offset + window)
        while consumed < offset:
            head += gen.terms[consumed]
            consumed += 1
        win = gen.terms[offset:offset + window]
        peak = max(abs(t) for t in win)
        last = abs(win[-1])
        growing = last >= 0.95 * peak
        flat = not growing and last > 0.0 and peak < 2.0 * last
        if growing or flat:
            # still growing near the window's end: decay information lies
            # deeper; flat: no curvature for the remainder model, and two
            # flat windows in a row mean deeper offsets only get flatter
            if flat:
                flat_streak += 1
                if flat_streak >= 2:
                    break
            continue
        improved = False
        betas = (1,) if offset < 2 else (1, offset + 1)
        for beta in betas:
            values = _levin_orders(win, beta=beta)
            picked = _pick_transform(values) if values is not None else None
            if picked is None:
                continue
            value, err = picked
            total = head + value
            est = max(err, 4.0 * _EPS * abs(total))
            if not candidates or est < candidates[0][0]:
                improved = True
            candidates.append((est, total))
        if not candidates:
            continue
        candidates.sort(key=lambda c: c[0])
        best_est, best_val = candidates[0]
        if len(candidates) >= 2:
            tail = _LEVIN_SAFETY * best_est
            if tail <= tol * max(1.0, abs(best_val)):
                return SumResult(best_val, len(gen.terms), tail,
                                 SumStatus.CONVERGED)
        stall = 0 if improved else stall + 1
        if stall >= 4 and offset >= 30:
            break
    if not candidates:
        return SumResult(0.0 + 0.0j, len(gen.terms), math.inf,
                         SumStatus.MAX_TERMS_EXCEEDED)
    best_est, best_val = candidates[0]
    tail = _LEVIN_SAFETY * best_est
    if len(candidates) > 1:
        tail = max(tail, 0.5 * abs(best_val - candidates[1][1]))
    return SumResult(best_val, len(gen.terms), tail, SumStatus.MAX_TERMS_EXCEEDED)


def sum_pfq_unit(spec: SeriesSpec, policy: SumPolicy = SumPolicy()) -> SumResult:
    """Evaluate a pFq series at z = 1.

    For p = q+1 the convergence parameter s = Re(sum(lower) - sum(upper))
    gates evaluation: s <= 0 returns status Divergent without summing.
    Convergent cases are accelerated; achievable tolerance is ~1e-6 for
    s <= 1 and improves with s.
    """
    if spec.argument != 1.0 + 0.0j:
        raise ValueError("sum_pfq_unit requires argument z = 1")
    if spec.truncation_degree() is not None:
        return _direct_sum(spec, policy)
    if len(spec.upper) == len(spec.lower) + 1:
        if spec.convergence_parameter() <= 0.0:
            return SumResult(0.0 + 0.0j, 0, math.inf, SumStatus.DIVERGENT)
        return _accelerated_unit_sum(spec, policy)
    # p <= q: entire in z, direct summation converges superexponentially
    return _direct_sum(spec, policy)


def sum_pfq(spec: SeriesSpec, policy: SumPolicy = SumPolicy()) -> SumResult:
    """Evaluate pFq(upper; lower; z) to the policy tolerance.

    p = q+1 series require |z| < 1; z = 1 exactly is routed to
    sum_pfq_unit (unless the policy rejects unit arguments), and other
    unit-modulus arguments are not supported.
    """
    if len(spec.upper) == len(spec.lower) + 1:
        r = abs(spec.argument)
        if r > 1.0:
            raise DivergentError(
                f"p = q+1 series diverges for |z| = {r} > 1"
            )
        if r == 1.0:
            if spec.argument == 1.0 + 0.0j:
                if policy.unit_argument_mode == "reject":
                    raise ValueError(
                        "unit-argument summation disabled by policy "
                        "(unit_argument_mode='reject')"
                    )
                return sum_pfq_unit(spec, policy)
            if spec.truncation_degree() is None:
                raise ValueError(
                    "unit-modulus arguments other than z = 1 are not supported"
                )
    return _direct_sum(spec, policy)


def contiguous_reduce_3f2(a: complex, b: complex, c: complex, d: complex,
                          z: complex) -> tuple[SeriesSpec, complex, SeriesSpec, complex]:
    """Decompose 3F2(a, b, d+1; c, d; z) into 2F1 pieces.

    Because (d+1)_n / (d)_n = 1 + n/d, the series splits as
    2F1(a, b; c; z) + (a b z / (d c)) * 2F1(a+1, b+1; c+1; z); the returned
    (spec, weight) pairs realize exactly that combination.
    """
    a, b, c, d, z = (complex(v) for v in (a, b, c, d, z))
    for name, v in (("c", c), ("d", d)):
        if _nearest_nonpositive_int(v, NEAR_INT_TOLERANCE) is not None:
            raise PoleError(
                f"contiguous_reduce_3f2: parameter {name} = {v} is within "
                f"{NEAR_INT_TOLERANCE} of a non-positive integer"
            )
    spec1 = SeriesSpec((a, b), (c,), z)
    spec2 = SeriesSpec((a + 1, b + 1), (c + 1,), z)
    return spec1, 1.0 + 0.0j, spec2, a * b * z / (d * c)
