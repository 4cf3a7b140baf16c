"""SplitMix64: a tiny, platform-independent 64-bit generator.

Update function (all arithmetic mod 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

Reference outputs for seed 0::

    0xE220A8397B1DCDAF
    0x6E789E6AA1B965F4
    0x06C45D188009454F
    0xF88BB8A8724C81EC
    0x1B39896A51A8749B

Signs for the random Fibonacci recurrence are read 64 per output word,
least significant bit first; a set bit means ``+``.
"""

from __future__ import annotations

from collections.abc import Iterator

MASK64 = 0xFFFFFFFFFFFFFFFF
GAMMA = 0x9E3779B97F4A7C15

SEED0_REFERENCE = (
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
    0x1B39896A51A8749B,
)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.next()


def sign_stream(seed: int) -> Iterator[int]:
    """Endless stream of +1/-1 drawn bitwise from SplitMix64(seed)."""
    gen = SplitMix64(seed)
    while True:
        word = gen.next()
        for _ in range(64):
            yield 1 if word & 1 else -1
            word >>= 1


def signs(seed: int, count: int) -> list[int]:
    out: list[int] = []
    gen = SplitMix64(seed)
    while len(out) < count:
        word = gen.next()
        take = min(64, count - len(out))
        out.extend(1 if (word >> i) & 1 else -1 for i in range(take))
    return out
