"""Mixed matroids: an oriented matroid whose signs on a subset ``A`` are forgotten.

A :class:`MixedMatroid` keeps the reference orientation ``om`` together with
the unsigned set ``A``. Signatures are always relative to that reference:
``+1`` keeps the reference sign of an element, ``-1`` flips it.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import product

from .errors import CapacityError, InputError
from .oriented import (
    OrientedMatroid,
    circuit_key,
    contract,
    delete,
    dual,
    is_acyclic,
    is_coloop_free,
    is_loop_free,
    is_totally_cyclic,
    reorient,
)
from .signed import MAX_GROUND, SignedSet, bits, popcount, restrict

Signature = dict[int, int]


@dataclass(frozen=True, order=True)
class MixedCircuit:
    signed_part: SignedSet
    unsigned_part: int

    @property
    def support(self) -> int:
        return self.signed_part.support | self.unsigned_part

    def is_positive(self) -> bool:
        return self.signed_part.minus == 0


def is_positive(mc: MixedCircuit) -> bool:
    """Every signed element carries +1 (vacuously true with no signed elements)."""
    return mc.is_positive()


@dataclass(frozen=True)
class MixedMatroid:
    om: OrientedMatroid
    unsigned: int

    def __post_init__(self) -> None:
        if self.unsigned < 0 or self.unsigned & ~self.om.ground.full:
            raise InputError("unsigned set is not a subset of the ground set")

    @property
    def ground(self):
        return self.om.ground

    @property
    def n(self) -> int:
        return self.om.n

    def unsigned_labels(self) -> list[str]:
        return self.om.ground.names(self.unsigned)


def make_mixed(om: OrientedMatroid, unsigned: int | Iterable[int | str] = 0) -> MixedMatroid:
    return MixedMatroid(om, om.ground.mask(unsigned))


def forget(c: SignedSet, unsigned: int) -> MixedCircuit:
    """Sign-forget ``c`` over ``unsigned``, choosing the canonical ± representative."""
    signed = restrict(c, unsigned)
    if signed.minus and not signed.plus:
        signed = -signed
    elif signed:
        signed = signed.canonical()
    return MixedCircuit(signed, c.support & unsigned)


def mixed_circuits(mm: MixedMatroid) -> list[MixedCircuit]:
    """One representative per ± pair of sign-forgotten circuits.

    An all-negative pair is represented by its positive member, so a pair
    contains a positive circuit exactly when its representative is positive.
    """
    seen = {forget(c, mm.unsigned) for c in mm.om.circuits}
    return sorted(seen, key=lambda m: (circuit_key(SignedSet(m.support, 0)), m.signed_part.minus))


def positive_mixed_circuits(mm: MixedMatroid) -> list[MixedCircuit]:
    return [m for m in mixed_circuits(mm) if m.is_positive()]


def normalize_signature(mm: MixedMatroid, s: Mapping[int | str, int] | None) -> Signature:
    """Map label- or index-keyed signatures to index keys, validating the domain."""
    out: Signature = {}
    for k, v in (s or {}).items():
        i = mm.ground.position(k)
        if not mm.unsigned >> i & 1:
            raise InputError(f"{mm.ground.labels[i]!r} is not an unsigned element")
        if v not in (1, -1):
            raise InputError(f"signature values must be +1 or -1, got {v!r}")
        out[i] = v
    return dict(sorted(out.items()))


def flips(s: Signature) -> int:
    m = 0
    for i, v in s.items():
        if v < 0:
            m |= 1 << i
    return m


def apply_signature(mm: MixedMatroid, s: Mapping[int | str, int] | None) -> MixedMatroid:
    """Sign the elements in the domain of ``s``; the rest of ``A`` stays unsigned."""
    s = normalize_signature(mm, s)
    domain = 0
    for i in s:
        domain |= 1 << i
    return MixedMatroid(reorient(mm.om, flips(s)), mm.unsigned & ~domain)


def coherent_orientations(mm: MixedMatroid) -> Iterator[Signature]:
    """All full signatures of ``A``: +1 before -1, lexicographic by element index."""
    elems = list(bits(mm.unsigned))
    if len(elems) > MAX_GROUND:
        raise CapacityError(f"{len(elems)} unsigned elements exceed {MAX_GROUND}")
    for values in product((1, -1), repeat=len(elems)):
        yield dict(zip(elems, values))


def coherent_oriented_matroids(mm: MixedMatroid) -> Iterator[tuple[Signature, OrientedMatroid]]:
    for s in coherent_orientations(mm):
        yield s, reorient(mm.om, flips(s))


def delete_mixed(mm: MixedMatroid, x) -> MixedMatroid:
    x = mm.ground.mask(x)
    return MixedMatroid(delete(mm.om, x), _compress_mask(mm.unsigned & ~x, x, mm.n))


def contract_mixed(mm: MixedMatroid, x) -> MixedMatroid:
    x = mm.ground.mask(x)
    return MixedMatroid(contract(mm.om, x), _compress_mask(mm.unsigned & ~x, x, mm.n))


def _compress_mask(mask: int, removed: int, n: int) -> int:
    out, new = 0, 0
    for old in range(n):
        if removed >> old & 1:
            continue
        if mask >> old & 1:
            out |= 1 << new
        new += 1
    return out


def dual_mixed(mm: MixedMatroid) -> MixedMatroid:
    return MixedMatroid(dual(mm.om), mm.unsigned)


def totally_cyclic_check(mm: MixedMatroid, method: str = "auto") -> tuple[bool, str]:
    """Is some coherent orientation totally cyclic?

    ``auto`` contracts ``A`` and tests the minor when ``om`` is coloop-free,
    and falls back to scanning every coherent orientation otherwise. Returns
    the answer and the method used (``contraction`` or ``brute-force``).
    """
    if method not in ("auto", "contraction", "brute-force"):
        raise InputError(f"unknown method {method!r}")
    if method == "contraction" or (method == "auto" and is_coloop_free(mm.om)):
        return is_totally_cyclic(contract(mm.om, mm.unsigned)), "contraction"
    return any(is_totally_cyclic(om) for _, om in coherent_oriented_matroids(mm)), "brute-force"


def is_totally_cyclic_mixed(mm: MixedMatroid, method: str = "auto") -> bool:
    return totally_cyclic_check(mm, method)[0]


def acyclic_check(mm: MixedMatroid, method: str = "auto") -> tuple[bool, str]:
    """Is some coherent orientation acyclic? ``deletion`` shortcut needs loop-free ``om``."""
    if method not in ("auto", "deletion", "brute-force"):
        raise InputError(f"unknown method {method!r}")
    if method == "deletion" or (method == "auto" and is_loop_free(mm.om)):
        return is_acyclic(delete(mm.om, mm.unsigned)), "deletion"
    return any(is_acyclic(om) for _, om in coherent_oriented_matroids(mm)), "brute-force"


def exists_acyclic_coherent(mm: MixedMatroid, method: str = "auto") -> bool:
    return acyclic_check(mm, method)[0]


def signature_labels(mm: MixedMatroid, s: Signature) -> dict[str, int]:
    return {mm.ground.labels[i]: v for i, v in sorted(s.items())}


def unsigned_count(mm: MixedMatroid) -> int:
    return popcount(mm.unsigned)
