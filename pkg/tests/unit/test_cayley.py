"""
Tests for Cayley graphs, quotient multigraphs and walk verification.
"""

import networkx as nx
import pytest
from conftest import cayley

from hamcayley_cli.engine.assemble import assemble_group, resolve_element
from hamcayley_cli.engine.catalog import build
from hamcayley_cli.engine.cayley import (
    build_cayley,
    double_edges,
    is_connected,
    quotient_multigraph,
    uses_edge,
    verify_ham_cycle,
    verify_ham_path,
    verify_quotient_cycle,
)
from hamcayley_cli.engine.gensets import parse_genset
from hamcayley_cli.engine.group import Label
from hamcayley_cli.engine.subgroups import subgroup_closure
from hamcayley_cli.engine.walk import parse_walk
from hamcayley_cli.exceptions import IdentityInGensetError


@pytest.fixture
def z6():
    return assemble_group({"kind": "cyclic", "generator": "x", "order": 6})


class TestCayleyGraph:
    def test_involutions_contribute_one_label(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        assert g.labels == (Label("t"), Label("t", -1), Label("f"))
        assert g.degree == 3
        assert g.order == 8

    def test_repr(self, dihedral8):
        assert repr(cayley(dihedral8, "t, f")) == "Cay(8.D8; t, f)"

    def test_identity_rejected(self, dihedral8):
        with pytest.raises(IdentityInGensetError):
            build_cayley(dihedral8, {"e": 0})

    def test_connectivity(self, dihedral8):
        assert is_connected(cayley(dihedral8, "t, f"))
        assert not is_connected(build_cayley(dihedral8, {"t": dihedral8.lookup("t")}))

    @pytest.mark.parametrize("words", ["t, f", "t", "f", "t^2, f", "t f, f"])
    def test_connectivity_agrees_with_networkx(self, dihedral8, words):
        g = build_cayley(dihedral8, parse_genset(dihedral8, words, require_generating=False))
        assert is_connected(g) == nx.is_connected(g.to_networkx())

    def test_networkx_export(self, dihedral8):
        graph = cayley(dihedral8, "t, f").to_networkx()
        assert graph.number_of_nodes() == 8
        assert graph.number_of_edges() == 12
        assert nx.is_connected(graph)
        assert all(d == 3 for _, d in graph.degree())

    def test_sequence_genset_named_by_elements(self, dihedral8):
        t = dihedral8.lookup("t")
        g = build_cayley(dihedral8, [t])
        assert list(g.genset) == [dihedral8.element_name(t)]


class TestVerifyHamCycle:
    def test_valid_cycle(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        check = verify_ham_cycle(g, parse_walk("t^3, f, t^3, f"))
        assert check
        assert check.reason is None
        assert not check.degenerate
        assert len(set(check.visited)) == 8

    def test_length_mismatch(self, dihedral8):
        check = verify_ham_cycle(cayley(dihedral8, "t, f"), parse_walk("t^4"))
        assert not check
        assert check.reason.startswith("length-mismatch")

    def test_repeated_vertex(self, dihedral8):
        check = verify_ham_cycle(cayley(dihedral8, "t, f"), parse_walk("t^3, f, t^-3, f"))
        assert check.reason == "repeated-vertex"

    def test_not_closed(self, dihedral8):
        check = verify_ham_cycle(cayley(dihedral8, "t, f"), parse_walk("f, f, t^3, f, t^2"))
        assert check.reason == "not-closed"
        assert check.endpoint != 0

    def test_label_outside_connection_set(self, dihedral8):
        check = verify_ham_cycle(cayley(dihedral8, "t, f"), parse_walk("t f, t^3, f, t^3"))
        assert check.reason.startswith("label-not-in-connection-set")

    def test_two_vertices_is_degenerate(self):
        Z2 = assemble_group({"kind": "cyclic", "generator": "a", "order": 2})
        check = verify_ham_cycle(cayley(Z2, "a"), parse_walk("a, a"))
        assert check
        assert check.degenerate

    def test_ham_path(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        assert verify_ham_path(g, parse_walk("t^3, f, t^3"))
        assert verify_ham_path(g, parse_walk("t^3, f, t^3, f")).reason.startswith("length-mismatch")
        assert verify_ham_path(g, parse_walk("t^3, f, t^-3"))
        assert verify_ham_path(g, parse_walk("t, t^-1, t^3, f, t^2")).reason == "repeated-vertex"


class TestQuotientMultigraph:
    def test_cosets_and_loops(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        qm = quotient_multigraph(g, subgroup_closure(dihedral8, [dihedral8.lookup("t")]))
        assert qm.order == 2
        assert qm.coset_name(0) == "H"
        assert qm.coset_name(1) == "Hf"
        # t and t⁻¹ from one coset are the same loop
        assert len(qm.loops) == 2
        assert double_edges(qm) == []

    def test_loop_step_rejected(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        qm = quotient_multigraph(g, subgroup_closure(dihedral8, [dihedral8.lookup("t")]))
        assert verify_quotient_cycle(qm, parse_walk("t, f")).reason == "loop-step"

    def test_parallel_edges(self, z6):
        g = cayley(z6, {"x": "x", "y": "x^3"})
        H = subgroup_closure(z6, [z6.lookup("x^2")])
        qm = quotient_multigraph(g, H, prefix="P")
        assert qm.order == 2
        assert qm.coset_name(0) == "P"
        doubles = double_edges(qm)
        assert len(doubles) == 1
        assert doubles[0].cosets == (0, 1)
        assert doubles[0].labels == (Label("x"), Label("x", -1))

    def test_double_edge_in_order_80(self):
        G = build("80.Z5xZ2^4")
        g = cayley(G, "x, x^2 v")
        qm = quotient_multigraph(g, subgroup_closure(G, [G.lookup("x")]), prefix="P")
        ac, bd = (qm.coset_of[resolve_element(G, w)] for w in ("a c", "b d"))
        assert qm.step(ac, Label("x")) == bd
        assert qm.step(ac, Label("x^2 v")) == bd
        assert (min(ac, bd), max(ac, bd)) in {e.cosets for e in double_edges(qm)}
        assert (qm.coset_name(ac), qm.coset_name(bd)) == ("Pac", "Pbd")

    def test_double_edge_through_the_center_in_order_112(self):
        G = build("112.Z7xZ2^3xZ2")
        g = cayley(G, "x z, v")
        qm = quotient_multigraph(g, subgroup_closure(G, [G.lookup("x")]), prefix="P")
        pz = qm.coset_of[G.lookup("z")]
        xz = resolve_element(G, "x z")
        edge = next(e for e in double_edges(qm) if e.cosets == (0, pz))
        assert {g.element(label) for label in edge.labels} == {xz, G.inv[xz]}
        assert qm.coset_name(0) == "P"
        assert qm.coset_name(pz) == "Pz"

    def test_quotient_cycle_endpoint(self, z6):
        g = cayley(z6, {"x": "x", "y": "x^3"})
        qm = quotient_multigraph(g, subgroup_closure(z6, [z6.lookup("x^2")]))
        check = verify_quotient_cycle(qm, parse_walk("x, y"))
        assert check
        assert check.degenerate
        assert check.endpoint == z6.lookup("x^4")
        assert uses_edge(qm, parse_walk("x, y"), (0, 1))

    def test_trivial_subgroup_matches_cayley_graph(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        qm = quotient_multigraph(g)
        assert qm.order == 8
        assert qm.loops == []
        assert verify_quotient_cycle(qm, parse_walk("t^3, f, t^3, f"))
