"""Variance sweeps, convergence detection, the observation constants and the
random-Fibonacci growth-rate estimator.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from . import exactnum, prng
from .convolve import ConvResult, conv, self_conv
from .dist import argmax, index_variance
from .seqgen import Seq, fib_seq, fib_term, reverse, symmetrize

__all__ = [
    "Family",
    "family_weights",
    "family_variance",
    "triple_variants",
    "sym_weights",
    "SweepPoint",
    "SweepSeries",
    "variance_sweep",
    "ConvergenceReport",
    "detect_convergence",
    "argmax_scan",
    "PAPER_TARGETS",
    "ConstantEntry",
    "ConstantsReport",
    "constants_suite",
    "LyapunovEstimate",
    "viswanath_estimate",
    "growth_rate",
    "ratio_convergence",
    "VISWANATH_CONSTANT",
]

VISWANATH_CONSTANT = 1.13198824


class Family(str, enum.Enum):
    SINGLE = "single"  # f[1..L]
    SELF = "self"  # f * f
    REV = "rev"  # f * reverse(f)
    TRIPLE = "triple"  # (f * reverse(f)) * f
    SYM = "sym"  # sym * sym, L = total symmetrized length

    def __str__(self) -> str:
        return self.value


def sym_weights(L: int) -> Seq:
    """Fibonacci sequence symmetrically extended to total length L.

    Even L mirrors f[1..L/2] with the centre repeated; odd L mirrors
    f[1..(L+1)/2] around a single shared centre. The alternation between the
    two is what makes the sym variance swing with L.
    """
    if L < 2:
        raise ValueError("symmetrized length must be >= 2")
    if L % 2 == 0:
        return symmetrize(fib_seq(L // 2), "duplicate")
    return symmetrize(fib_seq((L + 1) // 2), "shared")


def triple_variants(L: int) -> tuple[ConvResult, ConvResult]:
    """(S3 * S1, S3 * S2) with S1 = f[1..L], S2 = reverse(S1), S3 = S1 * S2."""
    s1 = fib_seq(L)
    s2 = reverse(s1)
    s3 = conv(s1, s2).seq
    return conv(s3, s1), conv(s3, s2)


def family_weights(family: Family | str, L: int) -> Seq | ConvResult:
    family = Family(family)
    if family is Family.SINGLE:
        return fib_seq(L)
    if family is Family.SELF:
        return self_conv(fib_seq(L))
    if family is Family.REV:
        s = fib_seq(L)
        return conv(s, reverse(s))
    if family is Family.TRIPLE:
        return triple_variants(L)[0]
    s = sym_weights(L)
    return self_conv(s)


def family_variance(family: Family | str, L: int) -> Fraction:
    return index_variance(family_weights(family, L))


@dataclass(frozen=True)
class SweepPoint:
    L: int
    variance: Fraction


@dataclass(frozen=True)
class SweepSeries:
    family: Family
    points: tuple[SweepPoint, ...]

    def __post_init__(self) -> None:
        Ls = [p.L for p in self.points]
        if any(b <= a for a, b in zip(Ls, Ls[1:])):
            raise ValueError("sweep L values must be strictly increasing")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def Ls(self) -> list[int]:
        return [p.L for p in self.points]

    @property
    def variances(self) -> list[Fraction]:
        return [p.variance for p in self.points]

    def to_csv(self, digits: int = exactnum.DEFAULT_DIGITS, exact: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["family", "L", "variance_decimal"]
        if exact:
            header += ["variance_num", "variance_den"]
        w.writerow(header)
        for p in self.points:
            row = [self.family.value, p.L, exactnum.render(exactnum.to_decimal(p.variance, digits))]
            if exact:
                row += [str(p.variance.numerator), str(p.variance.denominator)]
            w.writerow(row)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> SweepSeries:
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise ValueError("empty sweep CSV")
        family = Family(rows[0]["family"])
        points = []
        for r in rows:
            if r.get("variance_num") and r.get("variance_den"):
                v = Fraction(int(r["variance_num"]), int(r["variance_den"]))
            else:
                v = exactnum.parse_decimal(r["variance_decimal"])
            points.append(SweepPoint(int(r["L"]), v))
        return cls(family, tuple(points))


def variance_sweep(family: Family | str, L_from: int, L_to: int, step: int = 1) -> SweepSeries:
    if not 4 <= L_from <= L_to:
        raise ValueError(f"need 4 <= L_from <= L_to, got {L_from}..{L_to}")
    if step < 1:
        raise ValueError("step must be >= 1")
    family = Family(family)
    pts = tuple(SweepPoint(L, family_variance(family, L)) for L in range(L_from, L_to + 1, step))
    return SweepSeries(family, pts)


@dataclass(frozen=True)
class ConvergenceReport:
    converged: bool
    mode: str
    limit_estimate: Decimal
    first_converged_L: int | None
    window_mean: Decimal
    window_min: Decimal
    window_max: Decimal

    def to_dict(self) -> dict:
        r = exactnum.render
        return {
            "converged": self.converged,
            "mode": self.mode,
            "limit_estimate": r(self.limit_estimate),
            "first_converged_L": self.first_converged_L,
            "window_mean": r(self.window_mean),
            "window_min": r(self.window_min),
            "window_max": r(self.window_max),
        }


def _settled(vals: list[Fraction], end: int, window: int, lag: int, eps: Fraction) -> bool:
    # all |v[i] - v[i-lag]| < eps for i in (end-window, end]
    start = end - window + 1
    if start - lag < 0:
        return False
    return all(abs(vals[i] - vals[i - lag]) < eps for i in range(start, end + 1))


def detect_convergence(
    series: SweepSeries,
    epsilon: Fraction | float | str = Fraction(1, 10**9),
    window: int = 8,
    stats_window: int = 16,
    digits: int = exactnum.DEFAULT_DIGITS,
) -> ConvergenceReport:
    """Classify a sweep as smooth or oscillating.

    Smooth: the last ``window`` consecutive differences are all below
    ``epsilon``; the limit estimate is the last value. Otherwise the series is
    oscillating and the estimate is the mean of the trailing ``stats_window``
    points. An oscillating series counts as converged once its lag-2
    differences (even and odd L taken separately) settle below ``epsilon``.
    """
    if len(series) < window + 1:
        raise ValueError(f"need at least {window + 1} points, got {len(series)}")
    eps = Fraction(str(epsilon)) if not isinstance(epsilon, Fraction) else epsilon
    vals = series.variances
    Ls = series.Ls
    last = len(vals) - 1

    smooth = _settled(vals, last, window, 1, eps)
    lag = 1 if smooth else 2
    first = next((Ls[i] for i in range(window, last + 1) if _settled(vals, i, window, lag, eps)), None)
    converged = _settled(vals, last, window, lag, eps)

    tail = vals[-(window + 1):] if smooth else vals[-stats_window:]
    wmean = sum(tail, Fraction(0)) / len(tail)
    to_d = lambda q: exactnum.to_decimal(q, digits)  # noqa: E731
    return ConvergenceReport(
        converged=converged,
        mode="smooth" if smooth else "oscillating",
        limit_estimate=to_d(vals[-1] if smooth else wmean),
        first_converged_L=first,
        window_mean=to_d(wmean),
        window_min=to_d(min(tail)),
        window_max=to_d(max(tail)),
    )


def argmax_scan(L_from: int, L_to: int) -> list[tuple[int, int]]:
    if L_from < 4:
        raise ValueError("argmax_scan needs L_from >= 4")
    return [(L, argmax(self_conv(fib_seq(L)))) for L in range(L_from, L_to + 1)]


# Observation values as printed, kept as strings so they stay exact.
PAPER_TARGETS = {
    "obs1": "4.23606797750108",
    "obs2": "8.47213595500216",
    "obs3": "2",
    "obs4": "8.47213595500216",
    "obs5": "12.7081989582623",
    "obs7": "17.19423665579735",
    "obs7_max": "17.4442399455347",
    "obs7_min": "16.9442333660600",
}


@dataclass(frozen=True)
class ConstantEntry:
    computed: Fraction
    paper_target: str
    closed_form: Decimal | None = None
    note: str = ""

    @property
    def abs_error(self) -> Fraction:
        return abs(self.computed - exactnum.parse_decimal(self.paper_target))

    @property
    def closed_form_error(self) -> Fraction | None:
        if self.closed_form is None:
            return None
        return abs(self.computed - Fraction(self.closed_form))

    def to_dict(self, digits: int) -> dict:
        def err(q: Fraction | None) -> str | None:
            if q is None:
                return None
            if q == 0:
                return "0"
            return f"{Decimal(q.numerator) / Decimal(q.denominator):.6e}"

        d = {
            "computed": exactnum.render(exactnum.to_decimal(self.computed, digits)),
            "paper_target": self.paper_target,
            "abs_error": err(self.abs_error),
            "closed_form_target": None if self.closed_form is None else exactnum.render(
                exactnum.to_decimal(Fraction(self.closed_form), digits)),
            "closed_form_error": err(self.closed_form_error),
        }
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class ConstantsReport:
    L: int
    digits: int
    entries: dict[str, ConstantEntry] = field(default_factory=dict)
    obs5_variants_agree: bool = True
    obs6_argmax: int = 0

    def to_dict(self) -> dict:
        out = {k: e.to_dict(self.digits) for k, e in self.entries.items()}
        out["obs5"]["variants_agree"] = self.obs5_variants_agree
        out["obs6"] = {"computed": self.obs6_argmax, "paper_target": "2L-2",
                       "expected": 2 * self.L - 2, "ok": self.obs6_argmax == 2 * self.L - 2}
        out["meta"] = {"L": self.L, "digits": self.digits}
        return out


def constants_suite(L: int, digits: int = exactnum.DEFAULT_DIGITS, stats_window: int = 16) -> ConstantsReport:
    """Compute each observation's quantity at length L.

    The sym observation is the mean, min and max over the trailing
    ``stats_window`` total lengths ending at L.
    """
    if L < 50:
        raise ValueError("constants_suite needs L >= 50")
    work = digits + 10
    phi3 = exactnum.golden_ratio_cubed(work)

    v_single = family_variance(Family.SINGLE, L)
    v_self = family_variance(Family.SELF, L)
    v_rev = family_variance(Family.REV, L)
    t1, t2 = triple_variants(L)
    v_t1, v_t2 = index_variance(t1), index_variance(t2)
    sym = [family_variance(Family.SYM, n) for n in range(L - stats_window + 1, L + 1)]

    entries = {
        "obs1": ConstantEntry(v_single, PAPER_TARGETS["obs1"], phi3),
        "obs2": ConstantEntry(v_self, PAPER_TARGETS["obs2"], 2 * phi3),
        "obs3": ConstantEntry(v_self / v_single, PAPER_TARGETS["obs3"], Decimal(2),
                              note="ratio of obs2 to obs1"),
        "obs4": ConstantEntry(v_rev, PAPER_TARGETS["obs4"], 2 * phi3),
        "obs5": ConstantEntry(v_t1, PAPER_TARGETS["obs5"], 3 * phi3),
        "obs7": ConstantEntry(sum(sym, Fraction(0)) / len(sym), PAPER_TARGETS["obs7"],
                              note=f"mean over symmetrized lengths {L - stats_window + 1}..{L}"),
        "obs7_max": ConstantEntry(max(sym), PAPER_TARGETS["obs7_max"]),
        "obs7_min": ConstantEntry(min(sym), PAPER_TARGETS["obs7_min"]),
    }
    return ConstantsReport(L, digits, entries, v_t1 == v_t2, argmax(self_conv(fib_seq(L))))


RENORM_EXP = 512
_RENORM_BIG = 2.0**RENORM_EXP
_RENORM_SMALL = 2.0**-RENORM_EXP
_RENORM_LOG = RENORM_EXP * math.log(2.0)


@dataclass(frozen=True)
class LyapunovEstimate:
    n: int
    seed: int | None
    estimate: float
    log_accumulator: float
    renormalizations: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "estimate": f"{self.estimate:.15f}",
            "log_accumulator": repr(self.log_accumulator),
            "renormalizations": self.renormalizations,
            "target": str(VISWANATH_CONSTANT),
        }


def _finish(n: int, seed: int | None, last: float, acc: float, count: int) -> LyapunovEstimate:
    if last == 0.0:
        return LyapunovEstimate(n, seed, 0.0, acc, count)
    return LyapunovEstimate(n, seed, math.exp((acc + math.log(abs(last))) / n), acc, count)


def growth_rate(signs: Iterable[int], seed: int | None = None) -> LyapunovEstimate:
    """|f[n]|**(1/n) for the +/- recurrence driven by an explicit sign list,
    with f[1] = f[2] = 1 and n = len(signs) + 2.
    """
    a, b = 1.0, 1.0
    acc = 0.0
    count = 0
    steps = 0
    for s in signs:
        a, b = b, (b + a if s > 0 else b - a)
        if abs(b) > _RENORM_BIG:
            a *= _RENORM_SMALL
            b *= _RENORM_SMALL
            acc += _RENORM_LOG
            count += 1
        steps += 1
    return _finish(steps + 2, seed, b, acc, count)


def viswanath_estimate(n: int, seed: int) -> LyapunovEstimate:
    """Estimate the random-Fibonacci growth rate from one path of n terms.

    Only the last two terms are kept, as floats; both are scaled by 2**-512
    whenever the newest exceeds 2**512 and the scale is logged.
    """
    if n < 1000:
        raise ValueError("viswanath_estimate needs n >= 1000")
    gen = prng.SplitMix64(seed)
    big, small, step_log = _RENORM_BIG, _RENORM_SMALL, _RENORM_LOG
    a, b = 1.0, 1.0
    acc = 0.0
    count = 0
    remaining = n - 2
    while remaining > 0:
        word = gen.next()
        k = 64 if remaining > 64 else remaining
        remaining -= k
        for _ in range(k):
            if word & 1:
                a, b = b, b + a
            else:
                a, b = b, b - a
            word >>= 1
            if b > big or b < -big:
                a *= small
                b *= small
                acc += step_log
                count += 1
    return _finish(n, seed, b, acc, count)


def ratio_convergence(n: int, digits: int = exactnum.DEFAULT_DIGITS) -> Decimal:
    """f[n]/f[n-1] rendered to ``digits`` places."""
    if n < 2:
        raise ValueError("ratio_convergence needs n >= 2")
    return exactnum.to_decimal(Fraction(fib_term(n), fib_term(n - 1)), digits)
