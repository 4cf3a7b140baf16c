"""Exact linear convolution of integer sequences.

Two independent kernels: :func:`conv` (schoolbook, O(L*M)) and
:func:`conv_fast` (Karatsuba polynomial multiplication). Everything flows
through :func:`conv`; :func:`conv_fast` exists so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul

from .seqgen import Provenance, Seq

__all__ = ["ConvResult", "conv", "conv_fast", "self_conv", "schoolbook", "karatsuba"]

KARATSUBA_CUTOFF = 16


@dataclass(frozen=True)
class ConvResult:
    seq: Seq
    operands: tuple[Provenance, Provenance]

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def values(self) -> tuple[int, ...]:
        return self.seq.values

    def to_dict(self) -> dict:
        return {
            "provenance": self.seq.provenance.to_dict(),
            "operands": [p.to_dict() for p in self.operands],
            "values": [str(v) for v in self.seq.values],
        }


def schoolbook(a: list[int] | tuple[int, ...], b: list[int] | tuple[int, ...]) -> list[int]:
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        raise ValueError("cannot convolve an empty sequence")
    if la < lb:
        a, b, la, lb = b, a, lb, la
    rb = b[::-1]
    out = []
    # y[n] = sum_k a[k] b[n-k], 0-based n in [0, la+lb-2]
    for n in range(la + lb - 1):
        lo = max(0, n - lb + 1)
        hi = min(n, la - 1)
        # b[n-k] for k = lo..hi is rb[lb-1-n+k]
        off = lb - 1 - n
        out.append(sum(map(mul, a[lo : hi + 1], rb[lo + off : hi + off + 1])))
    return out


def _kara(a: list[int], b: list[int]) -> list[int]:
    # len(a) == len(b) == n
    n = len(a)
    if n <= KARATSUBA_CUTOFF:
        out = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    # pad low halves to the high-half length so sums line up
    m = n - h
    a0p = a0 + [0] * (m - h)
    b0p = b0 + [0] * (m - h)
    z0 = _kara(a0, b0)
    z2 = _kara(a1, b1)
    z1 = _kara([x + y for x, y in zip(a0p, a1)], [x + y for x, y in zip(b0p, b1)])
    for i, v in enumerate(z0):
        z1[i] -= v
    for i, v in enumerate(z2):
        z1[i] -= v
    out = [0] * (2 * n - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[i + h] += v
    for i, v in enumerate(z2):
        out[i + 2 * h] += v
    return out


def karatsuba(a: list[int] | tuple[int, ...], b: list[int] | tuple[int, ...]) -> list[int]:
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        raise ValueError("cannot convolve an empty sequence")
    n = max(la, lb)
    out = _kara(list(a) + [0] * (n - la), list(b) + [0] * (n - lb))
    return out[: la + lb - 1]


def _wrap(values: list[int], a: Seq, b: Seq, step: str) -> ConvResult:
    prov = Provenance("convolved", len(values), (step,))
    return ConvResult(Seq(tuple(values), prov), (a.provenance, b.provenance))


def conv(a: Seq, b: Seq) -> ConvResult:
    """Schoolbook linear convolution; output length len(a) + len(b) - 1."""
    return _wrap(schoolbook(a.values, b.values), a, b, "conv")


def conv_fast(a: Seq, b: Seq) -> ConvResult:
    return _wrap(karatsuba(a.values, b.values), a, b, "conv_fast")


def self_conv(a: Seq) -> ConvResult:
    return conv(a, a)
