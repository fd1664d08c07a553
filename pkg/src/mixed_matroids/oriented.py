"""Oriented matroids given by their full list of signed circuits.

Circuits are stored closed under negation: only the canonical representative
of each ``{C, -C}`` pair is kept (sign +1 on the minimum support element).
Everything here is brute force and meant for ground sets of at most 24
elements.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import InvalidMatroidError
from .signed import (
    GroundSet,
    SignedSet,
    bits,
    check_capacity,
    is_orthogonal,
    is_subset,
    negate_on,
    popcount,
    restrict,
)


def circuit_key(c: SignedSet) -> tuple:
    return (popcount(c.support), tuple(bits(c.support)), tuple(bits(c.minus)))


@dataclass(frozen=True)
class OrientedMatroid:
    ground: GroundSet
    circuits: frozenset[SignedSet]

    def __post_init__(self) -> None:
        reps = frozenset(c.canonical() for c in self.circuits)
        check_capacity(self.ground.n, len(reps))
        for c in reps:
            if not c:
                raise InvalidMatroidError("a circuit has empty support")
            if c.support & ~self.ground.full:
                raise InvalidMatroidError("a circuit uses an element outside the ground set")
        object.__setattr__(self, "circuits", reps)

    @classmethod
    def from_circuits(
        cls, ground: GroundSet, circuits: Iterable[SignedSet], verify: bool = True
    ) -> OrientedMatroid:
        """Build a matroid, closing ``circuits`` under negation.

        With ``verify`` the closed list is checked against the circuit axioms
        and the first violation is raised as :class:`InvalidMatroidError`.
        """
        circuits = [c for c in circuits]
        if verify:
            closed = set(circuits) | {-c for c in circuits}
            report = verify_circuit_axioms(closed, ground)
            if report:
                raise InvalidMatroidError(str(report[0]))
        return cls(ground, frozenset(circuits))

    @property
    def n(self) -> int:
        return self.ground.n

    def sorted_circuits(self) -> list[SignedSet]:
        return sorted(self.circuits, key=circuit_key)

    def signed_circuits(self) -> list[SignedSet]:
        """All circuits, both members of every opposite pair."""
        out = []
        for c in self.sorted_circuits():
            out.extend((c, -c))
        return out

    def positive_circuits(self) -> list[SignedSet]:
        # a pair {C, -C} is positive when one member has no negative entry
        return [c if c.minus == 0 else -c for c in self.sorted_circuits() if c.minus == 0 or c.plus == 0]

    @cached_property
    def loops(self) -> int:
        m = 0
        for c in self.circuits:
            if popcount(c.support) == 1:
                m |= c.support
        return m

    @cached_property
    def coloops(self) -> int:
        covered = 0
        for c in self.circuits:
            covered |= c.support
        return self.ground.full & ~covered

    @cached_property
    def matroid(self) -> Matroid:
        return underlying(self)

    def describe(self) -> list[str]:
        return [c.describe(self.ground) for c in self.sorted_circuits()]


@dataclass(frozen=True)
class Violation:
    kind: str  # empty | range | symmetry | incomparability | elimination
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def verify_circuit_axioms(candidate: Iterable[SignedSet], ground: GroundSet) -> list[Violation]:
    """Check a candidate signed-circuit set against the oriented matroid axioms.

    The candidate is taken as given (it is *not* closed under negation first).
    Returns the list of violations; an empty list means the set is the
    circuit set of an oriented matroid on ``ground``.
    """
    cands = sorted(set(candidate), key=circuit_key)
    show = lambda c: c.describe(ground)  # noqa: E731
    report: list[Violation] = []
    pool = set(cands)
    for c in cands:
        if not c:
            report.append(Violation("empty", "a circuit has empty support"))
        elif c.support & ~ground.full:
            report.append(Violation("range", f"circuit {c} uses elements outside [{ground.n}]"))
    cands = [c for c in cands if c and not c.support & ~ground.full]
    for c in cands:
        if -c not in pool:
            report.append(Violation("symmetry", f"{show(c)} is present but its negation is not"))
    for c1 in cands:
        for c2 in cands:
            if c2 == c1 or c2 == -c1:
                continue
            if is_subset(c1.support, c2.support):
                what = "equal supports with different signs" if c1.support == c2.support else "nested supports"
                if c1.support != c2.support or c1 < c2:
                    report.append(Violation("incomparability", f"{show(c1)} vs {show(c2)}: {what}"))
    for c1 in cands:
        for c2 in cands:
            common = c1.plus & c2.minus
            if not common or c2 == -c1:
                continue
            up, um = c1.plus | c2.plus, c1.minus | c2.minus
            allowed = [c3.support for c3 in cands if is_subset(c3.plus, up) and is_subset(c3.minus, um)]
            for e in bits(common):
                if not any(not s >> e & 1 for s in allowed):
                    report.append(
                        Violation(
                            "elimination",
                            f"no circuit eliminates {ground.labels[e]} between {show(c1)} and {show(c2)}",
                        )
                    )
    return report


@dataclass(frozen=True)
class Matroid:
    """Unsigned matroid described by its circuit supports."""

    n: int
    circuits: tuple[int, ...]
    rank: int
    bases: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def is_independent(self, mask: int) -> bool:
        return not any(c & ~mask == 0 for c in self.circuits)

    def closure(self, mask: int) -> int:
        out = mask
        for x in range(self.n):
            if not mask >> x & 1 and not self.is_independent(mask | 1 << x):
                out |= 1 << x
        return out

    def rank_of(self, mask: int) -> int:
        r, cur = 0, 0
        for x in bits(mask):
            if self.is_independent(cur | 1 << x):
                cur |= 1 << x
                r += 1
        return r

    def independent_sets(self, size: int) -> Iterator[int]:
        """Independent sets of exactly ``size`` elements, in lexicographic order."""
        n, circuits = self.n, self.circuits

        def extend(start: int, cur: int, k: int) -> Iterator[int]:
            if k == size:
                yield cur
                return
            for x in range(start, n - (size - k) + 1):
                nxt = cur | 1 << x
                if all(c & ~nxt for c in circuits):
                    yield from extend(x + 1, nxt, k + 1)

        yield from extend(0, 0, 0)

    def cocircuits(self) -> list[int]:
        """Cocircuit supports: complements of hyperplanes."""
        if self.rank == 0:
            return []
        hyperplanes: list[int] = []
        for ind in self.independent_sets(self.rank - 1):
            if any(is_subset(ind, h) for h in hyperplanes):
                continue
            hyperplanes.append(self.closure(ind))
        return sorted({self.full & ~h for h in hyperplanes}, key=lambda d: (popcount(d), tuple(bits(d))))


def underlying(om: OrientedMatroid) -> Matroid:
    """The underlying matroid of ``om``: rank, bases, independence test.

    Raises :class:`InvalidMatroidError` when the circuit supports fail the
    (unsigned) circuit elimination axiom, which is equivalent to the bases
    not being equicardinal.
    """
    supports = sorted({c.support for c in om.circuits}, key=lambda s: (popcount(s), s))
    for i, s1 in enumerate(supports):
        for s2 in supports[i + 1 :]:
            if is_subset(s1, s2) or is_subset(s2, s1):
                raise InvalidMatroidError("circuit supports are not an antichain")
            for e in bits(s1 & s2):
                u = (s1 | s2) & ~(1 << e)
                if not any(is_subset(s3, u) for s3 in supports):
                    raise InvalidMatroidError("circuit supports violate elimination: bases are not equicardinal")
    probe = Matroid(om.n, tuple(supports), 0, ())
    rank = probe.rank_of(om.ground.full)
    m = Matroid(om.n, tuple(supports), rank, ())
    bases = tuple(m.independent_sets(rank))
    return Matroid(om.n, tuple(supports), rank, bases)


def _sign_pattern(support: int, circuits: list[SignedSet]) -> list[SignedSet]:
    """All sign patterns on ``support`` (min element +1) orthogonal to every circuit."""
    elems = list(bits(support))
    first, rest = elems[0], elems[1:]
    relevant = [c for c in circuits if c.support & support]
    found = []
    for signs in product((1, -1), repeat=len(rest)):
        minus = 0
        for e, s in zip(rest, signs):
            if s < 0:
                minus |= 1 << e
        cand = SignedSet(support & ~minus, minus)
        assert cand.plus >> first & 1
        if all(is_orthogonal(cand, c) for c in relevant):
            found.append(cand)
    return found


def dual(om: OrientedMatroid) -> OrientedMatroid:
    """The dual oriented matroid, whose circuits are the signed cocircuits of ``om``.

    Supports come from the underlying matroid (complements of hyperplanes);
    signs are found by searching the patterns orthogonal to every circuit.
    """
    cached = om.__dict__.get("_dual")
    if cached is not None:
        return cached
    supports = om.matroid.cocircuits()
    reps = om.sorted_circuits()
    cocircuits = []
    for d in supports:
        found = _sign_pattern(d, reps)
        if len(found) != 1:
            names = ",".join(om.ground.names(d))
            raise InvalidMatroidError(
                f"cocircuit support {{{names}}} admits {len(found)} orthogonal sign patterns; input is not an oriented matroid"
            )
        cocircuits.append(found[0])
    result = OrientedMatroid(om.ground, frozenset(cocircuits))
    om.__dict__["_dual"] = result
    return result


def reorient(om: OrientedMatroid, s: int) -> OrientedMatroid:
    """Reorientation of ``om`` on the subset ``s`` (given as a mask)."""
    s = om.ground.mask(s)
    if not s:
        return om
    return OrientedMatroid(om.ground, frozenset(negate_on(c, s) for c in om.circuits))


def _compress(x: SignedSet, kept: list[int]) -> SignedSet:
    plus = minus = 0
    for new, old in enumerate(kept):
        if x.plus >> old & 1:
            plus |= 1 << new
        elif x.minus >> old & 1:
            minus |= 1 << new
    return SignedSet(plus, minus)


def delete(om: OrientedMatroid, x: int) -> OrientedMatroid:
    """Deletion ``om \\ x``: circuits avoiding ``x``, on the ground set minus ``x``."""
    x = om.ground.mask(x)
    if not x:
        return om
    kept = [i for i in range(om.n) if not x >> i & 1]
    circuits = [_compress(c, kept) for c in om.circuits if not c.support & x]
    return OrientedMatroid(om.ground.without(x), frozenset(circuits))


def contract(om: OrientedMatroid, x: int) -> OrientedMatroid:
    """Contraction ``om / x``: support-minimal nonempty restrictions of circuits."""
    x = om.ground.mask(x)
    if not x:
        return om
    restricted = {restrict(c, x).canonical() for c in om.circuits}
    restricted.discard(SignedSet())
    supports = sorted({c.support for c in restricted}, key=popcount)
    minimal = set()
    for s in supports:
        if not any(is_subset(t, s) for t in minimal):
            minimal.add(s)
    kept = [i for i in range(om.n) if not x >> i & 1]
    circuits = [_compress(c, kept) for c in restricted if c.support in minimal]
    return OrientedMatroid(om.ground.without(x), frozenset(circuits))


def is_acyclic(om: OrientedMatroid) -> bool:
    """No circuit is all-positive."""
    return not om.positive_circuits()


def is_totally_cyclic(om: OrientedMatroid) -> bool:
    """Every element lies in some all-positive circuit (vacuous when n = 0)."""
    covered = 0
    for c in om.positive_circuits():
        covered |= c.support
    return covered == om.ground.full


def is_coloop_free(om: OrientedMatroid) -> bool:
    return om.coloops == 0


def is_loop_free(om: OrientedMatroid) -> bool:
    return om.loops == 0

