"""Binary-word encoding of partitions and the Littlewood decomposition.

A partition is encoded by walking its rim from the bottom-left corner to the
top-right one, writing ``1`` for every horizontal edge and ``0`` for every
vertical edge. Padding with ``0`` on the left and ``1`` on the right gives a
bi-infinite word; position 0 is fixed by requiring as many ``1`` strictly left
of the origin as ``0`` at or right of it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Partition, conjugate, hook_lengths, is_self_conjugate

__all__ = [
    "AbacusWord",
    "LittlewoodImage",
    "SCCheck",
    "encode",
    "decode",
    "decompose",
    "compose",
    "t_core",
    "is_t_core",
    "check_sc_properties",
]


def _balance_point(bits: Sequence[int]) -> int:
    # ones left of the cut minus zeros right of it grows by exactly one per step
    return sum(1 for b in bits if b == 0)


@dataclass(frozen=True)
class AbacusWord:
    """Finite window of a bi-infinite 0/1 word.

    ``bits[origin]`` is the digit at position 0; everything left of the window
    is 0 and everything right of it is 1.
    """

    bits: tuple[int, ...]
    origin: int

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("abacus words are 0/1 sequences")
        if not 0 <= self.origin <= len(self.bits):
            raise ValueError("origin must lie inside the window")

    def __getitem__(self, pos: int) -> int:
        i = pos + self.origin
        if i < 0:
            return 0
        if i >= len(self.bits):
            return 1
        return self.bits[i]

    @property
    def lo(self) -> int:
        return -self.origin

    @property
    def hi(self) -> int:
        return len(self.bits) - self.origin

    def is_canonical(self) -> bool:
        left_ones = sum(self.bits[: self.origin])
        right_zeros = self.bits[self.origin :].count(0)
        return left_ones == right_zeros

    def trimmed(self) -> "AbacusWord":
        """Same word with leading zeros and trailing ones dropped."""
        start = 0
        while start < len(self.bits) and self.bits[start] == 0 and start < self.origin:
            start += 1
        stop = len(self.bits)
        while stop > start and self.bits[stop - 1] == 1 and stop > self.origin:
            stop -= 1
        return AbacusWord(self.bits[start:stop], self.origin - start)

    def __str__(self) -> str:
        w = self.trimmed()
        digits = "".join(map(str, w.bits))
        return digits[: w.origin] + "." + digits[w.origin :]

    @classmethod
    def parse(cls, text: str) -> "AbacusWord":
        text = text.strip()
        if text.count(".") != 1 or set(text) - set("01."):
            raise ValueError(f"not an abacus word: {text!r}")
        left, right = text.split(".")
        return cls(tuple(int(c) for c in left + right), len(left))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "AbacusWord":
        """Canonical word for a finite window with the origin left unspecified."""
        bits = tuple(bits)
        return cls(bits, _balance_point(bits)).trimmed()


def _parts_from_bits(bits: Iterable[int]) -> Partition:
    # each 0 is a row whose length is the number of 1s read before it
    parts = []
    ones = 0
    for b in bits:
        if b:
            ones += 1
        elif ones:
            parts.append(ones)
    return Partition(reversed(parts))


def encode(p: Iterable[int]) -> AbacusWord:
    p = Partition(p)
    bits: list[int] = []
    width = 0
    for part in reversed(p):
        bits.extend([1] * (part - width))
        bits.append(0)
        width = part
    return AbacusWord(tuple(bits), len(p))


def decode(w: AbacusWord) -> Partition:
    if not w.is_canonical():
        raise ValueError(f"word {w} is not canonical")
    return _parts_from_bits(w.bits)


@dataclass(frozen=True)
class LittlewoodImage:
    core: Partition
    quotient: tuple[Partition, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        object.__setattr__(self, "quotient", tuple(Partition(q) for q in self.quotient))
        if len(self.quotient) != self.t:
            raise ValueError(f"expected {self.t} quotient components, got {len(self.quotient)}")

    @property
    def weight(self) -> int:
        return sum(q.size for q in self.quotient)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "core": str(self.core),
            "quotient": [str(q) for q in self.quotient],
        }


def _residue_range(lo: int, hi: int, k: int, t: int) -> range:
    # indices i with lo <= i*t + k < hi, padded by one on each side
    return range((lo - k) // t - 1, (hi - k) // t + 2)


def decompose(p: Iterable[int], t: int) -> LittlewoodImage:
    """Littlewood decomposition of ``p`` into a ``t``-core and ``t``-quotient."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    word = encode(p)
    quotient = []
    core_bits: dict[int, int] = {}
    for k in range(t):
        idx = _residue_range(word.lo, word.hi, k, t)
        sub = [word[i * t + k] for i in idx]
        quotient.append(_parts_from_bits(sub))
        # sliding every 10 to 01 just sorts the residue class
        zeros = sub.count(0)
        for n, i in enumerate(idx):
            core_bits[i * t + k] = 0 if n < zeros else 1
    lo, hi = min(core_bits), max(core_bits) + 1
    core = _parts_from_bits(core_bits[pos] for pos in range(lo, hi))
    return LittlewoodImage(core, tuple(quotient), t)


def compose(img: LittlewoodImage) -> Partition:
    """Inverse of :func:`decompose`."""
    t = img.t
    if not is_t_core(img.core, t):
        raise ValueError(f"{img.core} is not a {t}-core")
    core_word = encode(img.core)
    charges = []
    for k in range(t):
        idx = _residue_range(core_word.lo, core_word.hi, k, t)
        charges.append(next(i for i in idx if core_word[i * t + k] == 1))
    words = [encode(nu) for nu in img.quotient]
    lo = min((d + w.lo) * t + k for k, (d, w) in enumerate(zip(charges, words)))
    hi = max((d + w.hi) * t + k + 1 for k, (d, w) in enumerate(zip(charges, words)))
    bits = []
    for pos in range(lo, hi):
        i, k = divmod(pos, t)
        bits.append(words[k][i - charges[k]])
    return _parts_from_bits(bits)


def t_core(p: Iterable[int], t: int) -> Partition:
    return decompose(p, t).core


def is_t_core(p: Iterable[int], t: int) -> bool:
    if t < 1:
        raise ValueError("t must be a positive integer")
    return all(h % t for h in hook_lengths(p))


@dataclass(frozen=True)
class SCCheck:
    """Outcome of checking the self-conjugate refinement for one ``(p, t)``.

    ``failed`` names the first violated property (``None`` when all hold) and
    ``lhs``/``rhs`` carry the two computed sides for that property.
    """

    partition: Partition
    t: int
    image: LittlewoodImage
    failed: str | None = None
    lhs: object = None
    rhs: object = None

    @property
    def ok(self) -> bool:
        return self.failed is None


def check_sc_properties(p: Iterable[int], t: int) -> SCCheck:
    """Check SC1-SC4 of the self-conjugate Littlewood refinement for ``p``."""
    p = Partition(p)
    if not is_self_conjugate(p):
        raise ValueError(f"{p} is not self-conjugate")
    img = decompose(p, t)
    nu = img.quotient

    def fail(name, lhs, rhs):
        return SCCheck(p, t, img, name, lhs, rhs)

    if not (is_t_core(img.core, t) and is_self_conjugate(img.core)):
        return fail("SC1", str(img.core), str(conjugate(img.core)))
    for j in range(t // 2):
        if nu[j] != conjugate(nu[t - 1 - j]):
            return fail("SC2", str(nu[j]), str(conjugate(nu[t - 1 - j])))
    if t % 2 and not is_self_conjugate(nu[(t - 1) // 2]):
        mid = nu[(t - 1) // 2]
        return fail("SC2'", str(mid), str(conjugate(mid)))
    if t % 2 == 0:
        size = img.core.size + 2 * t * sum(nu[i].size for i in range(t // 2))
    else:
        half = sum(nu[i].size for i in range((t - 1) // 2))
        size = img.core.size + 2 * t * half + t * nu[(t - 1) // 2].size
    if size != p.size:
        return fail("SC3", p.size, size)
    multiples = Counter({h: c for h, c in hook_lengths(p).items() if h % t == 0})
    scaled: Counter = Counter()
    for q in nu:
        for h, c in hook_lengths(q).items():
            scaled[t * h] += c
    if multiples != scaled:
        return fail("SC4", dict(sorted(multiples.items())), dict(sorted(scaled.items())))
    return SCCheck(p, t, img)
