"""Acceptance suite: one printed PASS/FAIL line per criterion, exact checks only."""
import random

import networkx as nx
import pytest

from mixed_matroids import fixture, graphic_oriented_matroid, mixed_graphic_matroid
from mixed_matroids.graphs import (
    acyclic_orientation,
    signed_bonds,
    strong_orientation,
    verify_cut,
    verify_directed_cycle,
)
from mixed_matroids.mixed import (
    acyclic_check,
    apply_signature,
    contract_mixed,
    totally_cyclic_check,
)
from mixed_matroids.oriented import (
    contract,
    delete,
    dual,
    is_acyclic,
    is_totally_cyclic,
    reorient,
    underlying,
    verify_circuit_axioms,
)
from mixed_matroids.signed import GroundSet, bits, is_orthogonal
from mixed_matroids.solver import (
    Status,
    brute_force_p_orientation,
    essential_characterization,
    find_p_orientation,
    is_p_connected,
    is_p_essential,
    make_pset,
    p_essential_elements,
)
from helpers import sd
from oracles import acyclic_by_brute_force, bridges, digraph, strong_by_brute_force
from population import ear_graph, p_connected_instances, random_mixed_graph

POPULATION = 500


@pytest.fixture(scope="module")
def p_instances():
    return list(p_connected_instances(seed=2024, count=POPULATION))


@pytest.fixture(scope="module")
def graphs():
    rng = random.Random(77)
    return [random_mixed_graph(rng) for _ in range(POPULATION)]


def test_criterion_1_g1_regression(criterion):
    mm = mixed_graphic_matroid(fixture("G1"))
    P = ["p1", "p2"]
    bad = []
    if not is_p_connected(mm, P):
        bad.append("G1 is not P-connected")
    if p_essential_elements(mm, P) != [mm.ground.position("e")]:
        bad.append(f"essential elements {p_essential_elements(mm, P)}")
    res = find_p_orientation(mm, P)
    if res.status is not Status.INFEASIBLE or res.witness != "e":
        bad.append(f"solver returned {res.to_dict()}")
    if brute_force_p_orientation(mm, P).status is not Status.INFEASIBLE:
        bad.append("brute force disagrees")
    criterion(1, "G1 regression with P = {p1, p2}", 4, bad)


def test_criterion_2_essential_elements_decide(criterion, p_instances):
    bad, checks = [], 0
    counts = {Status.FEASIBLE: 0, Status.INFEASIBLE: 0}
    for g, pairs, mm, P in p_instances:
        fast = find_p_orientation(mm, P)
        slow = brute_force_p_orientation(mm, P)
        expected = Status.INFEASIBLE if p_essential_elements(mm, P) else Status.FEASIBLE
        checks += 1
        counts[expected] += 1
        if not fast.status is slow.status is expected:
            bad.append(f"{g} {pairs}: solver {fast.status}, brute force {slow.status}, expected {expected}")
        for res in (fast, slow):
            if res.feasible and not is_p_connected(apply_signature(mm, res.signature), P):
                bad.append(f"{g} {pairs}: signature {res.signature} does not verify")
    assert counts[Status.FEASIBLE] and counts[Status.INFEASIBLE]
    criterion(2, f"solver = brute force = essential test on {checks} instances", checks, bad)


def test_criterion_3_essential_characterization(criterion, p_instances):
    bad, checks = [], 0
    for g, pairs, mm, P in p_instances:
        if mm.om.loops & make_pset(mm, P).mask:
            continue
        for e in bits(mm.unsigned):
            checks += 1
            if essential_characterization(mm, e, P) != is_p_essential(mm, e, P):
                bad.append(f"{g} {pairs}: element {mm.ground.labels[e]}")
    criterion(3, "essential-element characterization", checks, bad)


def _shortcut_population(seed, keep, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = ear_graph(rng) if rng.random() < 0.6 else random_mixed_graph(rng)
        mm = mixed_graphic_matroid(g)
        if keep(mm.om):
            out.append(mm)
    return out


def test_criterion_4_shortcuts(criterion):
    bad, checks = [], 0
    for mm in _shortcut_population(41, lambda om: not om.coloops, POPULATION):
        checks += 1
        if totally_cyclic_check(mm, "contraction")[0] != totally_cyclic_check(mm, "brute-force")[0]:
            bad.append(f"contraction shortcut wrong on {mm.om.describe()}")
    for mm in _shortcut_population(42, lambda om: not om.loops, POPULATION):
        checks += 1
        if acyclic_check(mm, "deletion")[0] != acyclic_check(mm, "brute-force")[0]:
            bad.append(f"deletion shortcut wrong on {mm.om.describe()}")
    criterion(4, "contract-A / delete-A shortcuts vs brute force", checks, bad)


def _duality_violations(om, bonds=None):
    bad = []
    d = dual(om)
    if dual(d) != om:
        bad.append("double dual differs")
    for c in om.signed_circuits():
        for k in d.signed_circuits():
            if not is_orthogonal(c, k):
                bad.append(f"{c} not orthogonal to {k}")
    for x in range(om.n):
        m = 1 << x
        if dual(delete(om, m)) != contract(d, m):
            bad.append(f"dual/delete {x}")
        if dual(contract(om, m)) != delete(d, m):
            bad.append(f"dual/contract {x}")
    for s in (1, om.ground.full, om.ground.full & 0b1010101010):
        if dual(reorient(om, s)) != reorient(d, s):
            bad.append(f"dual/reorient {s}")
    if is_totally_cyclic(om) != is_acyclic(d):
        bad.append("totally cyclic vs acyclic dual")
    if bonds is not None and set(d.circuits) != set(bonds):
        bad.append("cocircuits differ from bonds")
    return bad


def test_criterion_5_duality(criterion, graphs):
    bad, checks = [], 0
    for name in ["G1", "G2", "D2", "T3", "U3"]:
        g = fixture(name)
        checks += 1
        bad += _duality_violations(graphic_oriented_matroid(g), signed_bonds(g))
    for g in graphs[:300]:
        checks += 1
        bad += [f"{g}: {v}" for v in _duality_violations(graphic_oriented_matroid(g), signed_bonds(g))]
    criterion(5, "duality suite", checks, bad)


def test_criterion_6_graph_orientations(criterion, graphs):
    bad, checks = [], 0
    for g in graphs:
        checks += 2
        res = strong_orientation(g)
        if res.feasible != strong_by_brute_force(g):
            bad.append(f"strong feasibility differs on {g}")
        if res.feasible:
            if not nx.is_strongly_connected(digraph(g, res.orientation)):
                bad.append(f"orientation not strongly connected on {g}")
        elif res.certificate.type == "bridge":
            if res.certificate.edge not in bridges(g):
                bad.append(f"bad bridge certificate on {g}")
        elif not verify_cut(g, res.certificate.U):
            bad.append(f"bad cut certificate on {g}")
        res = acyclic_orientation(g)
        if res.feasible != acyclic_by_brute_force(g):
            bad.append(f"acyclic feasibility differs on {g}")
        if res.feasible:
            if not nx.is_directed_acyclic_graph(digraph(g, res.orientation)):
                bad.append(f"orientation has a cycle on {g}")
        else:
            for v in (1, -1):
                if not verify_directed_cycle(g, res.certificate.edges, {e: v for e in g.undirected}):
                    bad.append(f"bad cycle certificate on {g}")
    criterion(6, "strong and acyclic orientation with certificates", checks, bad)


def test_criterion_7_contraction(criterion, p_instances):
    bad, checks, gained = [], 0, 0
    for g, pairs, mm, P in p_instances:
        mask = make_pset(mm, P).mask
        checks += 1
        if not underlying(dual(mm.om)).is_independent(mask):
            bad.append(f"{g} {pairs}: P dependent in the dual")
        feasible = brute_force_p_orientation(mm, P).feasible
        for a in bits(mm.unsigned):
            checks += 1
            minor = contract_mixed(mm, 1 << a)
            if not is_p_connected(minor, P):
                bad.append(f"{g} {pairs}: contracting {mm.ground.labels[a]} breaks P-connectivity")
                continue
            after = brute_force_p_orientation(minor, P).feasible
            # orientability passes to the contraction; the converse is not claimed
            if feasible and not after:
                bad.append(f"{g} {pairs}: contracting {mm.ground.labels[a]} loses orientability")
            gained += after and not feasible
    print(f"contractions turning an infeasible instance feasible: {gained}")
    criterion(7, "P independent in the dual; contraction keeps P-connectivity and orientability", checks, bad)


def _hand_built_violations():
    g = GroundSet(("a", "b", "c"))
    missing_negation = [sd(g, ["a", "b"])]
    nested = [sd(g, ["a"]), sd(g, [], ["a"]), sd(g, ["a", "b"]), sd(g, [], ["a", "b"])]
    broken = [sd(g, ["a", "b"]), sd(g, [], ["a", "b"]), sd(g, ["b", "c"]), sd(g, [], ["b", "c"])]
    return g, {"missing negation": missing_negation, "nested supports": nested, "broken elimination": broken}


def test_criterion_8_axiom_gate(criterion, graphs):
    bad, checks = [], 0
    for g in graphs[:250]:
        om = graphic_oriented_matroid(g)
        family = [om, dual(om), reorient(om, om.ground.full & 0b0110110110)]
        for x in range(om.n):
            family += [delete(om, 1 << x), contract(om, 1 << x)]
        for m in family:
            checks += 1
            if verify_circuit_axioms(m.signed_circuits(), m.ground):
                bad.append(f"valid matroid rejected: {m.describe()}")
    ground, fixtures = _hand_built_violations()
    for name, cands in fixtures.items():
        checks += 1
        if not verify_circuit_axioms(cands, ground):
            bad.append(f"{name} accepted")
    criterion(8, "axiom gate", checks, bad)
