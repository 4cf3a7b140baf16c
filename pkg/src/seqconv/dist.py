"""Exact pmfs induced by nonnegative sequences, their index moments, and the
Gaussian comparison.

The random variable is the 1-based index n of the sequence, with
P(X = n) = s[n] / sum(s).
"""

from __future__ import annotations

import decimal
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from . import exactnum
from .convolve import ConvResult, self_conv
from .seqgen import Seq, fib_seq

__all__ = [
    "Pmf",
    "MomentReport",
    "TheoremCheck",
    "pmf_from_seq",
    "mean",
    "variance",
    "index_moments",
    "index_variance",
    "moment_report",
    "argmax",
    "theorem_check",
    "gaussian_mse",
    "MSE_PRECISION",
]

MSE_PRECISION = 30


def _values(s: Seq | ConvResult | Iterable[int]) -> tuple[int, ...]:
    if isinstance(s, ConvResult):
        return s.seq.values
    if isinstance(s, Seq):
        return s.values
    return tuple(int(v) for v in s)


@dataclass(frozen=True)
class Pmf:
    """Exact pmf on the contiguous support 1..N."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.probs:
            raise ValueError("empty pmf")
        if any(p < 0 for p in self.probs):
            raise ValueError("negative probability")
        if sum(self.probs, Fraction(0)) != 1:
            raise ValueError("probabilities do not sum to 1")

    @property
    def support(self) -> range:
        return range(1, len(self.probs) + 1)

    def __len__(self) -> int:
        return len(self.probs)

    def shifted(self, c: int) -> ShiftedPmf:
        return ShiftedPmf(self, c)


@dataclass(frozen=True)
class ShiftedPmf:
    """A pmf whose support starts at 1 + offset instead of 1."""

    base: Pmf
    offset: int

    @property
    def support(self) -> range:
        return range(1 + self.offset, len(self.base.probs) + 1 + self.offset)

    @property
    def probs(self) -> tuple[Fraction, ...]:
        return self.base.probs


def pmf_from_seq(s: Seq | ConvResult | Iterable[int]) -> Pmf:
    vals = _values(s)
    if any(v < 0 for v in vals):
        raise ValueError("sequence has negative entries; not a distribution")
    total = sum(vals)
    if total == 0:
        raise ValueError("sequence sums to zero; not a distribution")
    return Pmf(tuple(Fraction(v, total) for v in vals))


def mean(p: Pmf | ShiftedPmf) -> Fraction:
    return sum((n * q for n, q in zip(p.support, p.probs)), Fraction(0))


def variance(p: Pmf | ShiftedPmf) -> Fraction:
    """E[X^2] - E[X]^2 over the support, exactly."""
    m = mean(p)
    m2 = sum((n * n * q for n, q in zip(p.support, p.probs)), Fraction(0))
    return m2 - m * m


def index_moments(weights: Seq | ConvResult | Iterable[int]) -> tuple[Fraction, Fraction]:
    """(mean, variance) of the index pmf straight from integer power sums.

    Equal to ``mean(pmf_from_seq(w)), variance(pmf_from_seq(w))`` but avoids
    building N fractions; the sweeps use this.
    """
    vals = _values(weights)
    s0 = s1 = s2 = 0
    for n, v in enumerate(vals, start=1):
        s0 += v
        s1 += n * v
        s2 += n * n * v
    if s0 <= 0 or any(v < 0 for v in vals):
        raise ValueError("weights must be nonnegative with a positive sum")
    return Fraction(s1, s0), Fraction(s2 * s0 - s1 * s1, s0 * s0)


def index_variance(weights: Seq | ConvResult | Iterable[int]) -> Fraction:
    return index_moments(weights)[1]


@dataclass(frozen=True)
class MomentReport:
    mean: Fraction
    variance: Fraction
    std_dev: decimal.Decimal
    digits: int

    @property
    def mean_decimal(self) -> str:
        return exactnum.render(exactnum.to_decimal(self.mean, self.digits))

    @property
    def variance_decimal(self) -> str:
        return exactnum.render(exactnum.to_decimal(self.variance, self.digits))

    def to_dict(self) -> dict:
        return {
            "mean_decimal": self.mean_decimal,
            "variance_decimal": self.variance_decimal,
            "variance_num": str(self.variance.numerator),
            "variance_den": str(self.variance.denominator),
            "std_dev_decimal": exactnum.render(self.std_dev),
            "precision": self.digits,
        }


def moment_report(s: Seq | ConvResult | Iterable[int], digits: int = exactnum.DEFAULT_DIGITS) -> MomentReport:
    m, v = index_moments(s)
    return MomentReport(m, v, exactnum.sqrt_decimal(v, digits), digits)


def argmax(s: Seq | ConvResult | Iterable[int]) -> int:
    """1-based index of the largest value; ties go to the smallest index."""
    vals = _values(s)
    if not vals:
        raise ValueError("argmax of an empty sequence")
    best = 0
    for i in range(1, len(vals)):
        if vals[i] > vals[best]:
            best = i
    return best + 1


@dataclass(frozen=True)
class TheoremCheck:
    L: int
    ok_last: bool  # y[2L-1] < y[2L-2]
    ok_prev: bool  # y[2L-3] < y[2L-2]
    argmax: int

    @property
    def ok(self) -> bool:
        return self.ok_last and self.ok_prev and self.argmax == 2 * self.L - 2

    def to_dict(self) -> dict:
        return {"L": self.L, "ok_last": self.ok_last, "ok_prev": self.ok_prev,
                "argmax": self.argmax, "expected_argmax": 2 * self.L - 2}


def theorem_check(L: int) -> TheoremCheck:
    """Check the two strict inequalities that pin the maximum of the
    self-convolution of f[1..L] at index 2L - 2.

    Only meaningful for L >= 4: at L = 3 the self-convolution is
    [1, 2, 5, 4, 4] and the maximum sits at index 3.
    """
    if L < 4:
        raise ValueError(f"theorem_check needs L >= 4 (got L={L}); at L=3 the maximum is at index 3, not 2L-2")
    y = self_conv(fib_seq(L)).seq
    peak = y.at(2 * L - 2)
    return TheoremCheck(L, y.at(2 * L - 1) < peak, y.at(2 * L - 3) < peak, argmax(y))


def _dec(q: Fraction) -> decimal.Decimal:
    return decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)


def gaussian_mse(p: Pmf, precision: int = MSE_PRECISION) -> decimal.Decimal:
    """Mean squared error between ``p`` and a moment-matched normal density
    sampled on the same support and renormalized to sum to 1.
    """
    mu = mean(p)
    var = variance(p)
    if var <= 0:
        raise ValueError("gaussian_mse needs a positive variance")
    with decimal.localcontext() as ctx:
        ctx.prec = precision
        ctx.rounding = decimal.ROUND_HALF_EVEN
        samples = [(-_dec((n - mu) ** 2 / (2 * var))).exp() for n in p.support]
        total = sum(samples, decimal.Decimal(0))
        err = decimal.Decimal(0)
        for q, g in zip(p.probs, samples):
            d = _dec(q) - g / total
            err += d * d
        return +(err / len(p.probs))
