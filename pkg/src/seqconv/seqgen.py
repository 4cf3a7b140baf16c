"""Fibonacci-family sequence generators and transforms.

A "length-L Fibonacci sequence" is f[1..L]; the leading f[0] = 0 is left out.
Sequences are 1-based: ``seq.at(1)`` is the first value.
"""

from __future__ import annotations

import csv
import decimal
import io
import json
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace

from . import prng

__all__ = [
    "Provenance",
    "Seq",
    "RandomFibPath",
    "fib_term",
    "binet_term",
    "fib_seq",
    "reverse",
    "symmetrize",
    "random_fib",
    "fib_path",
    "MATERIALIZE_LIMIT",
]

FAMILIES = ("standard", "reversed", "symmetrized", "random", "convolved")
MATERIALIZE_LIMIT = 10_000


@dataclass(frozen=True)
class Provenance:
    family: str
    length: int
    transform_chain: tuple[str, ...] = ()
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "length": self.length,
            "transform_chain": list(self.transform_chain),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Provenance:
        return cls(d["family"], int(d["length"]), tuple(d.get("transform_chain", ())), d.get("seed"))


@dataclass(frozen=True)
class Seq:
    """Finite integer sequence, indexed from 1."""

    values: tuple[int, ...]
    provenance: Provenance = field(compare=False)

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("a Seq needs at least one value")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def of(cls, values: Iterable[int], family: str = "standard") -> Seq:
        vals = tuple(values)
        return cls(vals, Provenance(family, len(vals)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def at(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "value"])
        for i, v in enumerate(self.values, start=1):
            w.writerow([i, str(v)])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"provenance": self.provenance.to_dict(), "values": [str(v) for v in self.values]}
        )

    @classmethod
    def from_json(cls, text: str) -> Seq:
        d = json.loads(text)
        return cls(tuple(int(v) for v in d["values"]), Provenance.from_dict(d["provenance"]))

    @classmethod
    def from_csv(cls, text: str, family: str = "standard") -> Seq:
        rows = list(csv.DictReader(io.StringIO(text)))
        return cls.of((int(r["value"]) for r in rows), family)


def fib_term(n: int) -> int:
    """Classical Fibonacci number, f[0] = 0, f[1] = 1 (fast doubling)."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def pair(k: int) -> tuple[int, int]:
        if k == 0:
            return 0, 1
        a, b = pair(k >> 1)
        c = a * (2 * b - a)
        d = a * a + b * b
        return (d, c + d) if k & 1 else (c, d)

    return pair(n)[0]


def binet_term(n: int) -> int:
    """Evaluate Binet's closed form in decimal arithmetic and round to an integer.

    Working precision is n*log10(phi) + 20 significant digits, enough for the
    result to land within 1/2 of the integer.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    prec = int(n * math.log10((1 + math.sqrt(5)) / 2)) + 20
    with decimal.localcontext() as ctx:
        ctx.prec = prec
        ctx.rounding = decimal.ROUND_HALF_EVEN
        root5 = decimal.Decimal(5).sqrt()
        phi = (1 + root5) / 2
        psi = 1 - phi
        value = (phi**n - psi**n) / root5
        return int(value.to_integral_value(rounding=decimal.ROUND_HALF_EVEN))


def fib_seq(length: int) -> Seq:
    if length < 1:
        raise ValueError("length must be >= 1")
    vals = [1, 1]
    while len(vals) < length:
        vals.append(vals[-1] + vals[-2])
    return Seq(tuple(vals[:length]), Provenance("standard", length))


def _derive(s: Seq, values: Sequence[int], family: str, step: str) -> Seq:
    prov = replace(
        s.provenance,
        family=family,
        length=len(values),
        transform_chain=s.provenance.transform_chain + (step,),
    )
    return Seq(tuple(values), prov)


def reverse(s: Seq) -> Seq:
    return _derive(s, s.values[::-1], "reversed", "reversed")


def symmetrize(s: Seq, center: str = "duplicate") -> Seq:
    """Mirror ``s`` about its last element.

    ``center="duplicate"`` repeats the last element (length 2L);
    ``center="shared"`` keeps a single copy (length 2L - 1).
    """
    if center == "duplicate":
        vals = s.values + s.values[::-1]
    elif center == "shared":
        vals = s.values + s.values[-2::-1]
    else:
        raise ValueError(f"center must be 'duplicate' or 'shared', not {center!r}")
    return _derive(s, vals, "symmetrized", f"symmetrized:{center}")


@dataclass(frozen=True)
class RandomFibPath:
    n: int
    seed: int | None
    signs: tuple[int, ...]
    terms: tuple[int, ...] | None = None

    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def to_seq(self) -> Seq:
        if self.terms is None:
            raise ValueError(f"terms not materialized for n={self.n}")
        return Seq(self.terms, Provenance("random", self.n, ("random",), self.seed))


def fib_path(sign_list: Sequence[int], seed: int | None = None) -> RandomFibPath:
    """Run the +/- recurrence from f[1] = f[2] = 1 with explicit signs."""
    n = len(sign_list) + 2
    terms: tuple[int, ...] | None = None
    if n <= MATERIALIZE_LIMIT:
        t = [1, 1]
        for s in sign_list:
            t.append(t[-1] + s * t[-2])
        terms = tuple(t)
    return RandomFibPath(n, seed, tuple(sign_list), terms)


def random_fib(n: int, seed: int) -> RandomFibPath:
    """Random Fibonacci path of n terms with signs from SplitMix64(seed).

    Terms are only materialized for n <= MATERIALIZE_LIMIT; past that the
    path carries its signs alone.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return fib_path(prng.signs(seed, n - 2), seed)
