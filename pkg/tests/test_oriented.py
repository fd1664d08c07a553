from itertools import combinations

import pytest

from mixed_matroids import graphic_oriented_matroid
from mixed_matroids.errors import CapacityError, InvalidMatroidError
from mixed_matroids.oriented import (
    OrientedMatroid,
    contract,
    delete,
    dual,
    is_acyclic,
    is_totally_cyclic,
    reorient,
    underlying,
    verify_circuit_axioms,
)
from mixed_matroids.signed import GroundSet, SignedSet, is_orthogonal
from helpers import sd
from oracles import bases_by_subsets, subsets


def om_of(labels, *circuits):
    ground = GroundSet(tuple(labels))
    return OrientedMatroid(ground, frozenset(sd(ground, p, m) for p, m in circuits))


def kinds(report):
    return {v.kind for v in report}


# -- axiom gate ------------------------------------------------------------


def test_t3_satisfies_the_axioms(om_t3):
    assert verify_circuit_axioms(om_t3.signed_circuits(), om_t3.ground) == []


def test_missing_negation_is_reported():
    g = GroundSet(("d", "e"))
    assert kinds(verify_circuit_axioms({sd(g, ["d", "e"])}, g)) == {"symmetry"}


def test_nested_supports_are_reported():
    g = GroundSet(("d", "e"))
    cands = {sd(g, ["d"]), sd(g, ["d", "e"])}
    cands |= {-c for c in cands}
    assert "incomparability" in kinds(verify_circuit_axioms(cands, g))


def test_broken_elimination_is_reported():
    g = GroundSet(("a", "b", "c"))
    cands = {sd(g, ["a", "b"]), sd(g, ["b", "c"])}
    cands |= {-c for c in cands}
    assert kinds(verify_circuit_axioms(cands, g)) == {"elimination"}


def test_empty_support_is_reported():
    g = GroundSet(("a",))
    assert "empty" in kinds(verify_circuit_axioms({SignedSet()}, g))


def test_from_circuits_raises_on_first_violation():
    g = GroundSet(("a", "b", "c"))
    with pytest.raises(InvalidMatroidError, match="elimination"):
        OrientedMatroid.from_circuits(g, [sd(g, ["a", "b"]), sd(g, ["b", "c"])])


def test_capacity_guard_on_circuit_count():
    g = GroundSet(tuple(f"x{i}" for i in range(24)))
    with pytest.raises(CapacityError):
        OrientedMatroid(g, frozenset(SignedSet(i, 0) for i in range(1, 100_002)))


# -- underlying matroid ----------------------------------------------------


def test_underlying_t3(om_t3):
    m = underlying(om_t3)
    assert m.rank == 2
    assert sorted(m.bases) == sorted(a | b for a, b in combinations((1, 2, 4), 2))


def test_underlying_single_coloop():
    m = underlying(om_of(["x"]))
    assert (m.rank, m.bases) == (1, (1,))


def test_underlying_d2(om_d2):
    m = underlying(om_d2)
    assert m.rank == 1
    assert sorted(m.bases) == [0b01, 0b10]


def test_underlying_rejects_non_matroid():
    om = om_of(["a", "b", "c"], (["a", "b"], []), (["b", "c"], []))
    with pytest.raises(InvalidMatroidError):
        underlying(om)


def test_bases_match_subset_enumeration(any_fixture):
    om = graphic_oriented_matroid(any_fixture)
    supports = [c.support for c in om.circuits]
    assert sorted(underlying(om).bases) == bases_by_subsets(om.n, supports)


# -- duality ---------------------------------------------------------------


def test_dual_d2(om_d2):
    g = om_d2.ground
    assert dual(om_d2).circuits == {sd(g, ["d", "e"])}


def test_dual_t3(om_t3):
    g = om_t3.ground
    expected = {sd(g, ["f1"], ["f2"]), sd(g, ["f2"], ["f3"]), sd(g, ["f1"], ["f3"])}
    assert dual(om_t3).circuits == expected


def test_double_dual_g1(om_g1):
    again = dual(OrientedMatroid(om_g1.ground, dual(om_g1).circuits))
    assert again == om_g1


def test_dual_rejects_inconsistent_signs():
    # U(2,4) with every circuit all-positive admits no orthogonal cocircuit signs
    labels = ["a", "b", "c", "d"]
    om = om_of(labels, *[(list(t), []) for t in combinations(labels, 3)])
    with pytest.raises(InvalidMatroidError, match="orthogonal sign patterns"):
        dual(om)


def test_dual_of_free_and_empty_matroids():
    assert dual(om_of(["x"])) == om_of(["x"], (["x"], []))
    empty = om_of([])
    assert dual(empty) == empty


def test_orthogonality_and_involution_on_fixtures(any_fixture):
    om = graphic_oriented_matroid(any_fixture)
    d = dual(om)
    assert all(is_orthogonal(c, x) for c in om.signed_circuits() for x in d.signed_circuits())
    assert dual(OrientedMatroid(d.ground, d.circuits)) == om


# -- reorientation ---------------------------------------------------------


def test_reorient_d2(om_d2):
    g = om_d2.ground
    assert reorient(om_d2, g.mask(["e"])).circuits == {sd(g, ["d", "e"])}
    assert reorient(om_d2, 0) == om_d2


def test_dual_commutes_with_reorientation(any_fixture):
    om = graphic_oriented_matroid(any_fixture)
    for s in range(1 << om.n):
        assert dual(reorient(om, s)) == reorient(dual(om), s)


# -- minors ----------------------------------------------------------------


def test_contract_g1_by_e(om_g1):
    g = om_g1.ground
    c = contract(om_g1, g.mask(["e"]))
    h = c.ground
    assert h.labels == ("a", "b", "p1", "c", "d", "p2")
    # the outer 6-cycle is not a circuit: it contains both triangles
    assert c.circuits == {sd(h, ["p1", "c", "a"]), sd(h, ["p2", "b", "d"])}


def test_delete_g1_by_e(om_g1):
    d = delete(om_g1, om_g1.ground.mask(["e"]))
    h = d.ground
    assert d.circuits == {sd(h, ["a", "b", "c", "d", "p1", "p2"])}


def test_empty_minor_is_identity(om_g1):
    assert contract(om_g1, 0) == om_g1
    assert delete(om_g1, 0) == om_g1


def test_minor_duality_on_fixtures(any_fixture):
    om = graphic_oriented_matroid(any_fixture)
    for x in subsets(om.n):
        assert dual(delete(om, x)) == contract(dual(om), x)
        assert dual(contract(om, x)) == delete(dual(om), x)


def test_minors_satisfy_axioms(any_fixture):
    om = graphic_oriented_matroid(any_fixture)
    for x in subsets(om.n):
        for minor in (delete(om, x), contract(om, x)):
            assert verify_circuit_axioms(minor.signed_circuits(), minor.ground) == []


# -- acyclicity ------------------------------------------------------------


def test_t3_cyclicity(om_t3):
    assert not is_acyclic(om_t3)
    assert is_totally_cyclic(om_t3)
    assert is_acyclic(reorient(om_t3, om_t3.ground.mask(["f1"])))


def test_coloop_cyclicity():
    om = om_of(["x"])
    assert is_acyclic(om)
    assert not is_totally_cyclic(om)


def test_empty_matroid_is_both():
    om = om_of([])
    assert is_acyclic(om) and is_totally_cyclic(om)


def test_cyclicity_duality_on_fixture_reorientations(any_fixture):
    om = graphic_oriented_matroid(any_fixture)
    for s in range(1 << om.n):
        r = reorient(om, s)
        assert is_totally_cyclic(r) == is_acyclic(dual(r))
