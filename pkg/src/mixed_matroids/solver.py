"""P-connectivity, P-essential elements and P-orientations of mixed matroids.

``P`` is a set of signed elements. A mixed matroid is P-connected when every
``p`` in ``P`` lies in a positive circuit meeting ``P`` only in ``p`` and
some coherent orientation is totally cyclic. With ``relax=True`` the second
condition is dropped; nothing below is guaranteed in that mode.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from .errors import InputError, InternalConsistencyError, PreconditionError
from .mixed import (
    MixedMatroid,
    Signature,
    apply_signature,
    coherent_orientations,
    contract_mixed,
    make_mixed,
    positive_mixed_circuits,
    signature_labels,
    totally_cyclic_check,
)
from .oriented import OrientedMatroid, dual, is_totally_cyclic
from .signed import bits, lowest, popcount


class Status(str, Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    NOT_P_CONNECTED = "NotPConnected"


@dataclass(frozen=True)
class PSet:
    elements: tuple[int, ...]

    @property
    def mask(self) -> int:
        m = 0
        for p in self.elements:
            m |= 1 << p
        return m

    def __len__(self) -> int:
        return len(self.elements)


def make_pset(mm: MixedMatroid, items: Iterable[int | str] | PSet) -> PSet:
    """Resolve labels/indices into a :class:`PSet`, rejecting unsigned elements."""
    if isinstance(items, PSet):
        items = items.elements
    if isinstance(items, str):
        items = [items]
    elements = tuple(mm.ground.position(it) for it in items)
    if len(set(elements)) != len(elements):
        raise InputError("elements of P must be pairwise distinct")
    for p in elements:
        if mm.unsigned >> p & 1:
            raise InputError(f"{mm.ground.labels[p]!r} is unsigned; P must consist of signed elements")
    return PSet(elements)


@dataclass(frozen=True)
class PConnectivity:
    """Which parts of the P-connectivity definition hold."""

    isolated: bool  # every p has a positive circuit meeting P only in p
    totally_cyclic: bool
    missing: tuple[int, ...] = ()
    cyclic_method: str = ""

    def holds(self, relax: bool = False) -> bool:
        return self.isolated and (relax or self.totally_cyclic)


def p_connectivity(mm: MixedMatroid, P, relax: bool = False) -> PConnectivity:
    P = make_pset(mm, P)
    pm = P.mask
    found = 0
    for c in positive_mixed_circuits(mm):
        hit = c.support & pm
        if hit and hit & (hit - 1) == 0:
            found |= hit
    missing = tuple(p for p in P.elements if not found >> p & 1)
    if relax:
        return PConnectivity(not missing, True, missing, "skipped")
    cyclic, method = totally_cyclic_check(mm)
    return PConnectivity(not missing, cyclic, missing, method)


def is_p_connected(mm: MixedMatroid, P, relax: bool = False) -> bool:
    return p_connectivity(mm, P, relax).holds(relax)


def _require_unsigned(mm: MixedMatroid, e: int | str) -> int:
    i = mm.ground.position(e)
    if not mm.unsigned >> i & 1:
        raise InputError(f"{mm.ground.labels[i]!r} is not an unsigned element")
    return i


def is_p_essential(mm: MixedMatroid, e: int | str, P, relax: bool = False) -> bool:
    """Both single-element signatures of ``e`` destroy P-connectivity."""
    e = _require_unsigned(mm, e)
    P = make_pset(mm, P)
    if not is_p_connected(mm, P, relax):
        raise PreconditionError("is_p_essential requires a P-connected mixed matroid")
    return not any(is_p_connected(apply_signature(mm, {e: s}), P, relax) for s in (1, -1))


def p_essential_elements(mm: MixedMatroid, P, relax: bool = False) -> list[int]:
    P = make_pset(mm, P)
    if not is_p_connected(mm, P, relax):
        raise PreconditionError("P-essential elements are defined for P-connected mixed matroids")
    return [
        e
        for e in bits(mm.unsigned)
        if not any(is_p_connected(apply_signature(mm, {e: s}), P, relax) for s in (1, -1))
    ]


def essential_characterization(mm: MixedMatroid, e: int | str, P, relax: bool = False) -> bool:
    """Decide P-essentiality of ``e`` from the positive circuits of ``mm`` alone.

    (a) every positive circuit meeting ``P`` in exactly one element contains
    ``e``; (b) for positive circuits ``C1`` containing ``p1`` and ``C2``
    containing ``p2``, some positive circuit contains both ``p1`` and ``p2``
    inside ``C1 | C2`` minus ``e``.
    """
    e = _require_unsigned(mm, e)
    P = make_pset(mm, P)
    if len(P) != 2:
        raise PreconditionError("the characterization needs |P| = 2")
    p1, p2 = P.elements
    if (mm.om.loops >> p1 | mm.om.loops >> p2) & 1:
        raise PreconditionError("the characterization excludes loops in P")
    if not is_p_connected(mm, P, relax):
        raise PreconditionError("the characterization requires a P-connected mixed matroid")
    pm, ebit = P.mask, 1 << e
    positive = [c.support for c in positive_mixed_circuits(mm)]
    if any(not s & ebit for s in positive if popcount(s & pm) == 1):
        return False
    both = [s for s in positive if s & pm == pm]
    with_p1 = [s for s in positive if s >> p1 & 1]
    with_p2 = [s for s in positive if s >> p2 & 1]
    for s1 in with_p1:
        for s2 in with_p2:
            room = (s1 | s2) & ~ebit
            if not any(s & ~room == 0 for s in both):
                return False
    return True


def facets(om: OrientedMatroid) -> list[int]:
    """Facets of ``om``: complements of the supports of its positive cocircuits."""
    full = om.ground.full
    return [full & ~d.support for d in dual(om).positive_circuits()]


def check_facet_criterion(om: OrientedMatroid, P) -> bool:
    """Facet form of P-connectivity for an oriented matroid.

    ``om`` must be totally cyclic, and for every ``p`` in ``P`` the set
    ``P - p`` lies on a facet of the dual that misses ``p``. Facets of the dual
    are complements of positive circuits of ``om``, computed here through
    the double dual.
    """
    P = make_pset(make_mixed(om), P)
    if len(P) < 2:
        raise PreconditionError("the facet criterion needs |P| >= 2")
    if not is_totally_cyclic(om):
        return False
    pm = P.mask
    dual_facets = facets(dual(om))
    for p in P.elements:
        rest = pm & ~(1 << p)
        if not any(rest & ~f == 0 and not f >> p & 1 for f in dual_facets):
            return False
    return True


@dataclass(frozen=True)
class OrientationResult:
    status: Status
    signature: dict[str, int] | None = None
    witness: str | None = None
    method: str = "theorem"
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    def to_dict(self) -> dict:
        out: dict = {"status": self.status.value, "method": self.method}
        if self.signature is not None:
            out["signature"] = dict(self.signature)
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def _not_connected(mm: MixedMatroid, P: PSet, method: str, relax: bool) -> OrientationResult:
    info = p_connectivity(mm, P, relax)
    detail = {
        "condition_isolated_circuits": info.isolated,
        "condition_totally_cyclic": info.totally_cyclic,
        "missing": mm.ground.names(PSet(info.missing).mask),
    }
    return OrientationResult(Status.NOT_P_CONNECTED, method=method, detail=detail)


def brute_force_p_orientation(mm: MixedMatroid, P, relax: bool = False) -> OrientationResult:
    """Scan every coherent orientation and return the first P-connected one."""
    P = make_pset(mm, P)
    for s in coherent_orientations(mm):
        if is_p_connected(apply_signature(mm, s), P, relax):
            return OrientationResult(Status.FEASIBLE, signature_labels(mm, s), method="brute-force")
    if not is_p_connected(mm, P, relax):
        return _not_connected(mm, P, "brute-force", relax)
    return OrientationResult(Status.INFEASIBLE, method="brute-force")


def _lift(s: Signature, e: int) -> Signature:
    # indices above a contracted element shift down by one
    return {(i if i < e else i + 1): v for i, v in s.items()}


def _construct(mm: MixedMatroid, P: PSet, relax: bool) -> Signature:
    """Extend a P-orientation of ``mm / e`` to ``mm`` for the minimum unsigned ``e``."""
    if not mm.unsigned:
        return {}
    e = lowest(mm.unsigned)
    sub = contract_mixed(mm, 1 << e)
    subP = PSet(tuple(p if p < e else p - 1 for p in P.elements))
    if sub.om.loops & subP.mask:
        hit = brute_force_p_orientation(sub, subP, relax)
        if not hit.feasible:
            raise InternalConsistencyError("contraction lost P-orientability")
        sub_sig = {sub.ground.index[k]: v for k, v in hit.signature.items()}
    else:
        sub_sig = _construct(sub, subP, relax)
    partial = _lift(sub_sig, e)
    signed = apply_signature(mm, partial)
    for v in (1, -1):
        if is_p_connected(apply_signature(signed, {e: v}), P, relax):
            return {**partial, e: v}
    raise InternalConsistencyError(
        f"neither sign of {mm.ground.labels[e]!r} extends the P-orientation of the contraction"
    )


def find_p_orientation(mm: MixedMatroid, P, relax: bool = False) -> OrientationResult:
    """P-orientation for |P| = 2 by the no-essential-element criterion.

    Infeasible instances carry the minimum-index P-essential element as
    witness. Feasible ones are built by induction on ``A``: orient the
    contraction by the minimum unsigned element, then try ``+1`` and ``-1``
    for that element. Other sizes of ``P``, or ``P`` containing a loop, go to
    :func:`brute_force_p_orientation`.
    """
    P = make_pset(mm, P)
    loops = mm.om.loops & P.mask
    if len(P) != 2 or loops:
        return brute_force_p_orientation(mm, P, relax)
    if not is_p_connected(mm, P, relax):
        return _not_connected(mm, P, "theorem", relax)
    essential = p_essential_elements(mm, P, relax)
    if essential:
        return OrientationResult(Status.INFEASIBLE, witness=mm.ground.labels[essential[0]], method="theorem")
    try:
        sig = _construct(mm, P, relax)
    except InternalConsistencyError:
        if not relax:
            raise
        # no guarantee without total cyclicity: fall back to the exhaustive scan
        hit = brute_force_p_orientation(mm, P, relax)
        detail = {**hit.detail, "theorem_construction_failed": True}
        return OrientationResult(hit.status, hit.signature, hit.witness, hit.method, detail)
    if popcount(sum(1 << i for i in sig)) != popcount(mm.unsigned) or not is_p_connected(
        apply_signature(mm, sig), P, relax
    ):
        raise InternalConsistencyError("constructed signature is not a P-orientation")
    return OrientationResult(Status.FEASIBLE, signature_labels(mm, sig), method="theorem")
