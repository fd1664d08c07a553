"""Mixed graphs and their graphic mixed matroids.

An undirected edge is stored with a reference direction ``tail -> head``;
orientations of undirected edges are ``+1`` (reference direction) or ``-1``
(reversed). Digraph properties (reachability, strong connectivity,
acyclicity) are decided here by plain graph search and never through the
matroid layer, so the two can be cross-checked.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import InputError, InternalConsistencyError
from .mixed import (
    MixedMatroid,
    apply_signature,
    is_totally_cyclic_mixed,
    make_mixed,
)
from .oriented import OrientedMatroid, delete, is_acyclic
from .signed import GroundSet, SignedSet, bits
from .solver import OrientationResult, Status, brute_force_p_orientation, find_p_orientation


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    directed: bool = True

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class MixedGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex labels must be distinct")
        vs = set(self.vertices)
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise InputError("edge ids must be distinct")
        for e in self.edges:
            if e.tail not in vs or e.head not in vs:
                raise InputError(f"edge {e.id!r} has an unknown endpoint")

    @property
    def ground(self) -> GroundSet:
        return GroundSet(tuple(e.id for e in self.edges))

    @property
    def undirected(self) -> list[str]:
        return [e.id for e in self.edges if not e.directed]

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise InputError(f"unknown edge {eid!r}")

    def without_edges(self, ids: Iterable[str]) -> MixedGraph:
        drop = set(ids)
        return MixedGraph(self.vertices, tuple(e for e in self.edges if e.id not in drop))

    def with_edges(self, extra: Iterable[Edge]) -> MixedGraph:
        return MixedGraph(self.vertices, self.edges + tuple(extra))


GraphOrientation = dict[str, int]


# -- cycles and bonds ------------------------------------------------------


def enumerate_cycles(g: MixedGraph) -> list[SignedSet]:
    """All simple cycles of ``g`` as signed edge sets.

    Each cycle is found once: its minimum-index edge is traversed along its
    stored direction (so it gets +1 and the cycle is already canonical), the
    rest is a vertex-simple path back through higher-index edges. Every
    other edge is +1 when traversed along its stored direction, else -1.
    """
    g.ground  # capacity check
    adj: dict[str, list[tuple[int, str, int]]] = {v: [] for v in g.vertices}
    for j, e in enumerate(g.edges):
        if e.is_loop:
            continue
        adj[e.tail].append((j, e.head, 1))
        adj[e.head].append((j, e.tail, -1))

    cycles: list[SignedSet] = []
    for i, e in enumerate(g.edges):
        if e.is_loop:
            cycles.append(SignedSet(1 << i, 0))
            continue
        target = e.tail
        stack = [(e.head, 1 << i, 0, frozenset((e.head,)))]
        while stack:
            v, plus, minus, seen = stack.pop()
            for j, w, s in adj[v]:
                if j <= i:
                    continue
                p2, m2 = (plus | 1 << j, minus) if s > 0 else (plus, minus | 1 << j)
                if w == target:
                    cycles.append(SignedSet(p2, m2))
                elif w not in seen:
                    stack.append((w, p2, m2, seen | {w}))
    return cycles


def graphic_oriented_matroid(g: MixedGraph) -> OrientedMatroid:
    return OrientedMatroid(g.ground, frozenset(enumerate_cycles(g)))


def mixed_graphic_matroid(g: MixedGraph) -> MixedMatroid:
    om = graphic_oriented_matroid(g)
    return make_mixed(om, g.undirected)


def signed_bonds(g: MixedGraph) -> list[SignedSet]:
    """Minimal edge cuts by enumeration of vertex subsets.

    An edge leaving ``U`` gets +1, an edge entering ``U`` gets -1. Results
    are canonical representatives of ± pairs.
    """
    vidx = {v: k for k, v in enumerate(g.vertices)}
    cuts = set()
    for u_mask in range(1, 1 << len(g.vertices)):
        plus = minus = 0
        for j, e in enumerate(g.edges):
            t_in = u_mask >> vidx[e.tail] & 1
            h_in = u_mask >> vidx[e.head] & 1
            if t_in and not h_in:
                plus |= 1 << j
            elif h_in and not t_in:
                minus |= 1 << j
        if plus | minus:
            cuts.add(SignedSet(plus, minus).canonical())
    supports = {c.support for c in cuts}
    return [c for c in cuts if not any(s != c.support and s & ~c.support == 0 for s in supports)]


# -- digraph oracles -------------------------------------------------------


def orientation_arcs(g: MixedGraph, orientation: Mapping[str, int] | None = None) -> list[tuple[str, str, str]]:
    """Arcs ``(u, v, edge_id)`` of the digraph obtained from an orientation.

    Undirected edges missing from ``orientation`` are left out.
    """
    orientation = orientation or {}
    arcs = []
    for e in g.edges:
        if e.directed:
            arcs.append((e.tail, e.head, e.id))
        elif e.id in orientation:
            v = orientation[e.id]
            arcs.append((e.tail, e.head, e.id) if v > 0 else (e.head, e.tail, e.id))
    return arcs


def _reach(vertices: Iterable[str], arcs, start: str, reverse: bool = False) -> set[str]:
    out: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v, _ in arcs:
        if reverse:
            u, v = v, u
        out[u].append(v)
    seen, todo = {start}, deque([start])
    while todo:
        x = todo.popleft()
        for y in out[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def has_path(vertices, arcs, s: str, t: str) -> bool:
    return t in _reach(vertices, arcs, s)


def is_strongly_connected(vertices, arcs) -> bool:
    vertices = list(vertices)
    if not vertices:
        return True
    v0 = vertices[0]
    n = len(vertices)
    return len(_reach(vertices, arcs, v0)) == n and len(_reach(vertices, arcs, v0, reverse=True)) == n


def is_acyclic_digraph(vertices, arcs) -> bool:
    """Kahn's algorithm; self-loops count as cycles."""
    indeg = {v: 0 for v in vertices}
    out: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v, _ in arcs:
        out[u].append(v)
        indeg[v] += 1
    todo = deque(v for v in indeg if indeg[v] == 0)
    done = 0
    while todo:
        x = todo.popleft()
        done += 1
        for y in out[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                todo.append(y)
    return done == len(indeg)


def _components(vertices, links) -> list[set[str]]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in links:
        parent[find(u)] = find(v)
    groups: dict[str, set[str]] = {}
    for v in vertices:
        groups.setdefault(find(v), set()).add(v)
    return [groups[r] for r in sorted(groups, key=lambda r: min(list(vertices).index(x) for x in groups[r]))]


def find_bridge(g: MixedGraph) -> str | None:
    """First edge (by input order) whose removal disconnects its endpoints."""
    for e in g.edges:
        if e.is_loop:
            continue
        rest = [(f.tail, f.head, f.id) for f in g.edges if f.id != e.id]
        if e.head not in _reach(g.vertices, rest + [(b, a, i) for a, b, i in rest], e.tail):
            return e.id
    return None


def find_bad_cut(g: MixedGraph) -> list[str] | None:
    """A vertex set ``U`` whose cut has every edge directed out of ``U``.

    Undirected edges are contracted; a source strong component of the
    contracted digraph (or any component, if it is disconnected) gives ``U``.
    Returns ``None`` when the contracted digraph is strongly connected.
    """
    if not g.vertices:
        return None
    classes = _components(g.vertices, [(e.tail, e.head) for e in g.edges if not e.directed])
    cls = {v: k for k, c in enumerate(classes) for v in c}
    nodes = list(range(len(classes)))
    arcs = [(cls[e.tail], cls[e.head], e.id) for e in g.edges if e.directed and cls[e.tail] != cls[e.head]]
    # strong components: mutual reachability
    reach = {k: _reach(nodes, arcs, k) for k in nodes}
    comps: list[set[int]] = []
    for k in nodes:
        if not any(k in c for c in comps):
            comps.append({m for m in nodes if m in reach[k] and k in reach[m]})
    if len(comps) == 1:
        return None
    for comp in comps:
        entering = any(v in comp and u not in comp for u, v, _ in arcs)
        if not entering:
            members = set().union(*(classes[k] for k in comp))
            return [v for v in g.vertices if v in members]
    raise InternalConsistencyError("a digraph with several strong components has a source component")


def verify_cut(g: MixedGraph, U: Iterable[str]) -> bool:
    """``U`` is a nonempty proper vertex subset and every cut edge is directed out of it."""
    U = set(U)
    if not U or U >= set(g.vertices):
        return False
    for e in g.edges:
        t_in, h_in = e.tail in U, e.head in U
        if t_in == h_in:
            continue
        if not e.directed or not t_in:
            return False
    return True


def verify_directed_cycle(g: MixedGraph, ids: Iterable[str], orientation: Mapping[str, int] | None = None) -> bool:
    """The edges form one directed cycle in the (partially) oriented digraph."""
    ids = list(ids)
    arcs = [a for a in orientation_arcs(g, orientation) if a[2] in set(ids)]
    if not ids or len(arcs) != len(ids):
        return False
    outd: dict[str, int] = {}
    ind: dict[str, int] = {}
    for u, v, _ in arcs:
        outd[u] = outd.get(u, 0) + 1
        ind[v] = ind.get(v, 0) + 1
    if set(outd) != set(ind) or any(outd[v] != 1 or ind[v] != 1 for v in outd):
        return False
    verts = list(outd)
    return is_strongly_connected(verts, arcs)


# -- orientation problems --------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    type: str  # bridge | cut | cycle
    edge: str | None = None
    U: tuple[str, ...] | None = None
    edges: tuple[str, ...] | None = None

    def to_dict(self) -> dict:
        out: dict = {"type": self.type}
        if self.edge is not None:
            out["edge"] = self.edge
        if self.U is not None:
            out["U"] = list(self.U)
        if self.edges is not None:
            out["edges"] = list(self.edges)
        return out


@dataclass(frozen=True)
class GraphOrientationResult:
    feasible: bool
    orientation: GraphOrientation | None = None
    certificate: Certificate | None = None
    detail: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        out: dict = {"status": "Feasible" if self.feasible else "Infeasible"}
        if self.orientation is not None:
            out["orientation"] = dict(self.orientation)
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.detail:
            out["detail"] = self.detail
        return out


def _undirected_indices(mm: MixedMatroid) -> list[int]:
    return list(bits(mm.unsigned))


def strong_orientation(g: MixedGraph) -> GraphOrientationResult:
    """Orient the undirected edges so that the digraph is strongly connected.

    Feasibility is decided on the mixed graphic matroid by contracting the
    undirected edges. The orientation is then built one edge at a time,
    keeping the partially signed matroid totally cyclic. Infeasible inputs get
    a bridge or an all-out cut certificate found by graph search.
    """
    mm = mixed_graphic_matroid(g)
    cut = None
    if g.vertices:
        comps = _components(g.vertices, [(e.tail, e.head) for e in g.edges])
        if len(comps) > 1:
            cut = [v for v in g.vertices if v in comps[0]]
    if cut is not None:
        return GraphOrientationResult(False, certificate=Certificate("cut", U=tuple(cut)))
    bridge = find_bridge(g)
    if bridge is not None:
        if mm.om.coloops >> g.ground.index[bridge] & 1 == 0:
            raise InternalConsistencyError(f"bridge {bridge!r} is not a coloop of the cycle matroid")
        return GraphOrientationResult(False, certificate=Certificate("bridge", edge=bridge))
    if not is_totally_cyclic_mixed(mm):
        U = find_bad_cut(g)
        if U is None:
            raise InternalConsistencyError("matroid test says infeasible but no all-out cut exists")
        return GraphOrientationResult(False, certificate=Certificate("cut", U=tuple(U)))

    current, sig = mm, {}
    for e in _undirected_indices(mm):
        for v in (1, -1):
            cand = apply_signature(current, {e: v})
            if is_totally_cyclic_mixed(cand):
                current, sig[e] = cand, v
                break
        else:
            raise InternalConsistencyError(f"no sign of {g.edges[e].id!r} keeps the matroid totally cyclic")
    orientation = {g.edges[i].id: v for i, v in sig.items()}
    if not is_strongly_connected(g.vertices, orientation_arcs(g, orientation)):
        raise InternalConsistencyError("constructed orientation is not strongly connected")
    return GraphOrientationResult(True, orientation=orientation)


def acyclic_orientation(g: MixedGraph) -> GraphOrientationResult:
    """Orient the undirected edges so that the digraph is acyclic.

    Feasible exactly when the directed edges alone form no directed cycle
    (self-loops are always infeasible). The orientation is built one edge at
    a time, keeping the deletion of the still-unsigned edges acyclic.
    """
    for e in g.edges:
        if e.is_loop:
            return GraphOrientationResult(False, certificate=Certificate("cycle", edges=(e.id,)))
    mm = mixed_graphic_matroid(g)
    directed_part = delete(mm.om, mm.unsigned)
    positive = directed_part.positive_circuits()
    if positive:
        ids = tuple(directed_part.ground.names(positive[0].support))
        if not verify_directed_cycle(g, ids):
            raise InternalConsistencyError("positive circuit is not a directed cycle")
        return GraphOrientationResult(False, certificate=Certificate("cycle", edges=ids))

    current, sig = mm, {}
    for e in _undirected_indices(mm):
        for v in (1, -1):
            cand = apply_signature(current, {e: v})
            if is_acyclic(delete(cand.om, cand.unsigned)):
                current, sig[e] = cand, v
                break
        else:
            raise InternalConsistencyError(f"no sign of {g.edges[e].id!r} keeps the digraph acyclic")
    orientation = {g.edges[i].id: v for i, v in sig.items()}
    if not is_acyclic_digraph(g.vertices, orientation_arcs(g, orientation)):
        raise InternalConsistencyError("constructed orientation is not acyclic")
    return GraphOrientationResult(True, orientation=orientation)


def _aux_ids(g: MixedGraph, count: int) -> list[str]:
    taken = {e.id for e in g.edges}
    out = []
    for j in range(count):
        name = f"p{j + 1}"
        while name in taken:
            name += "'"
        taken.add(name)
        out.append(name)
    return out


def pairs_graph(g: MixedGraph, pairs: Iterable[tuple[str, str]]) -> tuple[MixedGraph, list[str]]:
    """``g`` plus one auxiliary directed edge ``t -> s`` per demand pair ``(s, t)``."""
    pairs = [tuple(p) for p in pairs]
    if not pairs:
        raise InputError("at least one vertex pair is required")
    vs = set(g.vertices)
    for s, t in pairs:
        if s not in vs or t not in vs:
            raise InputError(f"pair ({s!r}, {t!r}) names an unknown vertex")
        if s == t:
            raise InputError(f"pair ({s!r}, {t!r}) has equal endpoints")
    ids = _aux_ids(g, len(pairs))
    aux = [Edge(pid, t, s, True) for pid, (s, t) in zip(ids, pairs)]
    return g.with_edges(aux), ids


def p_orientation_pairs(
    g: MixedGraph,
    pairs: Iterable[tuple[str, str]],
    relax: bool = False,
    brute_force: bool = False,
) -> OrientationResult:
    """Orient ``g`` so that every pair ``(s, t)`` gets a directed ``s -> t`` path.

    Reduces to P-orientation of the mixed graphic matroid of ``g`` plus
    auxiliary edges ``t -> s``. Feasible orientations are checked directly on
    the digraph before being returned.
    """
    pairs = [tuple(p) for p in pairs]
    g2, ids = pairs_graph(g, pairs)
    mm = mixed_graphic_matroid(g2)
    solve = brute_force_p_orientation if brute_force else find_p_orientation
    result = solve(mm, ids, relax)
    detail = {**result.detail, "auxiliary": {pid: [s, t] for pid, (s, t) in zip(ids, pairs)}}
    if result.status is Status.FEASIBLE:
        arcs = orientation_arcs(g, result.signature)
        for s, t in pairs:
            if not has_path(g.vertices, arcs, s, t):
                raise InternalConsistencyError(f"orientation has no {s}->{t} path")
    return OrientationResult(result.status, result.signature, result.witness, result.method, detail)


# -- fixtures --------------------------------------------------------------


def _g1_edges() -> list[Edge]:
    return [
        Edge("a", "v2", "v1"),
        Edge("b", "v3", "v2"),
        Edge("p1", "v1", "v4"),
        Edge("c", "v4", "v5"),
        Edge("d", "v5", "v6"),
        Edge("p2", "v6", "v3"),
        Edge("e", "v2", "v5", directed=False),
    ]


def fixture(name: str) -> MixedGraph:
    """Small named instances: G1, G2, D2, T3, U3."""
    six = tuple(f"v{i}" for i in range(1, 7))
    three = ("v1", "v2", "v3")
    if name == "G1":
        return MixedGraph(six, tuple(_g1_edges()))
    if name == "G2":
        return MixedGraph(six, tuple(_g1_edges() + [Edge("e'", "v2", "v5", directed=False)]))
    if name == "D2":
        return MixedGraph(("u", "v"), (Edge("d", "u", "v"), Edge("e", "u", "v", directed=False)))
    if name == "T3":
        return MixedGraph(three, (Edge("f1", "v1", "v2"), Edge("f2", "v2", "v3"), Edge("f3", "v3", "v1")))
    if name == "U3":
        return MixedGraph(
            three,
            (
                Edge("u1", "v1", "v2", directed=False),
                Edge("u2", "v2", "v3", directed=False),
                Edge("u3", "v3", "v1", directed=False),
            ),
        )
    raise KeyError(name)


FIXTURES = ("G1", "G2", "D2", "T3", "U3")
