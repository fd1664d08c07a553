"""Ground sets, bit-mask subsets and signed sets.

Subsets of a ground set ``[n]`` are plain ``int`` bit masks: bit ``i`` is set
when element ``i`` belongs to the subset. A :class:`SignedSet` is a pair of
disjoint masks ``(plus, minus)``.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .errors import CapacityError, InputError

MAX_GROUND = 24
MAX_CIRCUITS = 100_000


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Index of the lowest set bit; ``-1`` for the empty mask."""
    return (mask & -mask).bit_length() - 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class GroundSet:
    """Labelled ground set ``[n]``; labels are the display names of elements."""

    labels: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise InputError(f"ground labels must be non-empty strings, got {lab!r}")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise InputError("ground labels must be pairwise distinct")
        if len(labels) > MAX_GROUND:
            raise CapacityError(f"ground set of size {len(labels)} exceeds {MAX_GROUND}")
        object.__setattr__(self, "index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return self.n

    def position(self, item: int | str) -> int:
        """Index of an element given either by label or by index."""
        if isinstance(item, str):
            try:
                return self.index[item]
            except KeyError:
                raise InputError(f"unknown element label {item!r}") from None
        if isinstance(item, int) and not isinstance(item, bool) and 0 <= item < self.n:
            return item
        raise InputError(f"element {item!r} out of range for ground set of size {self.n}")

    def mask(self, items: int | str | Iterable[int | str] | None) -> int:
        """Convert labels/indices (or an existing mask) to a bit mask.

        An ``int`` argument is taken to already be a mask.
        """
        if items is None:
            return 0
        if isinstance(items, int) and not isinstance(items, bool):
            if items < 0 or items & ~self.full:
                raise InputError(f"subset mask {items:#x} out of range for n={self.n}")
            return items
        if isinstance(items, str):
            items = [items]
        m = 0
        for it in items:
            m |= 1 << self.position(it)
        return m

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def without(self, mask: int) -> GroundSet:
        return GroundSet(tuple(lab for i, lab in enumerate(self.labels) if not mask >> i & 1))


@dataclass(frozen=True, order=True)
class SignedSet:
    """A sign vector in ``{+1, -1, 0}^n`` stored as two disjoint masks."""

    plus: int = 0
    minus: int = 0

    def __post_init__(self) -> None:
        if self.plus < 0 or self.minus < 0:
            raise InputError("signed set masks must be non-negative")
        if self.plus & self.minus:
            raise InputError("an element cannot be both positive and negative")

    @classmethod
    def from_signs(cls, signs: dict[int, int]) -> SignedSet:
        plus = minus = 0
        for i, s in signs.items():
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
        return cls(plus, minus)

    @property
    def support(self) -> int:
        return self.plus | self.minus

    def __bool__(self) -> bool:
        return bool(self.plus | self.minus)

    def __neg__(self) -> SignedSet:
        return SignedSet(self.minus, self.plus)

    def sign(self, i: int) -> int:
        if self.plus >> i & 1:
            return 1
        if self.minus >> i & 1:
            return -1
        return 0

    def signs(self) -> dict[int, int]:
        return {i: self.sign(i) for i in bits(self.support)}

    def canonical(self) -> SignedSet:
        """Representative of ``{X, -X}`` with sign +1 on its minimum support element."""
        sup = self.support
        if self.minus & sup & -sup:
            return -self
        return self

    def is_positive(self) -> bool:
        return self.minus == 0

    def describe(self, ground: GroundSet) -> str:
        parts = [f"{ground.labels[i]}:{'+' if self.sign(i) > 0 else '-'}" for i in bits(self.support)]
        return "(" + ", ".join(parts) + ")"


def restrict(x: SignedSet, y: int) -> SignedSet:
    """The signed set equal to ``x`` outside ``y`` and zero on ``y``."""
    if y < 0:
        raise InputError("subset mask must be non-negative")
    return SignedSet(x.plus & ~y, x.minus & ~y)


def negate_on(x: SignedSet, s: int) -> SignedSet:
    """Flip the signs of ``x`` on the elements of ``s``."""
    if s < 0:
        raise InputError("subset mask must be non-negative")
    keep_p, keep_m = x.plus & ~s, x.minus & ~s
    return SignedSet(keep_p | (x.minus & s), keep_m | (x.plus & s))


def is_orthogonal(x: SignedSet, y: SignedSet) -> bool:
    """Standard orthogonality of sign vectors.

    True when the supports are disjoint, or when the products of signs on the
    common support take both values +1 and -1.
    """
    if not x.support & y.support:
        return True
    agree = (x.plus & y.plus) | (x.minus & y.minus)
    differ = (x.plus & y.minus) | (x.minus & y.plus)
    return bool(agree) and bool(differ)


def check_capacity(n: int, n_circuits: int = 0) -> None:
    if n > MAX_GROUND:
        raise CapacityError(f"ground set of size {n} exceeds {MAX_GROUND}")
    if n_circuits > MAX_CIRCUITS:
        raise CapacityError(f"{n_circuits} circuit representatives exceed {MAX_CIRCUITS}")
