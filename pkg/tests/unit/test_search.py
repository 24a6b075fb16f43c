"""
Tests for exact hamiltonian search, checked against a brute-force oracle.
"""

import networkx as nx
import pytest
from conftest import cayley

from hamcayley_cli.engine.assemble import assemble_group
from hamcayley_cli.engine.callbacks import SearchCallbacks
from hamcayley_cli.engine.cayley import (
    build_cayley,
    quotient_multigraph,
    verify_ham_cycle,
    verify_ham_path,
    verify_quotient_cycle,
)
from hamcayley_cli.engine.catalog import build
from hamcayley_cli.engine.group import Label
from hamcayley_cli.engine.search import SearchConstraint, SearchMode, search_directed_ham, search_ham
from hamcayley_cli.engine.subgroups import subgroup_closure


def _abelian(*orders):
    names = "abcd"
    return assemble_group(
        {"kind": "abelian", "factors": [{"name": names[i], "order": o} for i, o in enumerate(orders)]}
    )


def _cyclic(n):
    return assemble_group({"kind": "cyclic", "generator": "x", "order": n})


def _s3():
    return assemble_group({"kind": "perm", "degree": 3, "generators": {"a": "(1,2)", "b": "(1,2,3)"}})


def _oracle(g, directed=False):
    """Exhaustive existence check over vertex sequences."""
    if not nx.is_connected(g.to_networkx()):
        return False
    G = g.group
    steps = list(g.genset.values()) if directed else sorted(g.connection_set)
    n = G.order
    visited = [False] * n
    visited[0] = True

    def dfs(v, depth):
        if depth == n:
            return any(G.mul(v, s) == 0 for s in steps) and (directed or n > 2)
        for s in steps:
            w = G.mul(v, s)
            if not visited[w]:
                visited[w] = True
                if dfs(w, depth + 1):
                    return True
                visited[w] = False
        return False

    return dfs(0, 1)


UNDIRECTED_CASES = [
    ("Z6", lambda: _cyclic(6), "x^2, x^3"),
    ("Z7", lambda: _cyclic(7), "x"),
    ("Z2^3", lambda: _abelian(2, 2, 2), "a, b, c"),
    ("D8", lambda: build("8.D8"), "t, f"),
    ("Q8", lambda: build("8.Q8"), "i, j"),
    ("S3", _s3, "a, b"),
    ("S4", lambda: build("24.S4"), "a, b"),
]

DIRECTED_CASES = [
    ("Z2xZ4", lambda: _abelian(2, 4), "a, b"),
    ("Z3xZ3", lambda: _abelian(3, 3), "a, b"),
    ("Z2xZ6", lambda: _abelian(2, 6), "a, b"),
    ("Z4xZ4", lambda: _abelian(4, 4), "a, b"),
    ("D8", lambda: build("8.D8"), "t, f"),
    ("Q8", lambda: build("8.Q8"), "i, j"),
    ("S3", _s3, "a, b"),
]


@pytest.mark.parametrize("name,make,words", UNDIRECTED_CASES, ids=[c[0] for c in UNDIRECTED_CASES])
def test_search_agrees_with_oracle(name, make, words):
    g = cayley(make(), words)
    found = search_ham(g, SearchConstraint(timeout=0))
    assert (found is not None) == _oracle(g)
    if found is not None:
        assert verify_ham_cycle(g, found)


@pytest.mark.parametrize("name,make,words", DIRECTED_CASES, ids=[c[0] for c in DIRECTED_CASES])
def test_directed_search_agrees_with_oracle(name, make, words):
    g = cayley(make(), words)
    found = search_directed_ham(g, SearchConstraint(timeout=0))
    assert (found is not None) == _oracle(g, directed=True)
    if found is not None:
        assert all(label.sign == 1 for label in found)
        assert verify_ham_cycle(g, found)


class TestConstraints:
    def test_required_edge_starts_the_cycle(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        found = search_ham(g, SearchConstraint(required_edge=(0, Label("f")), timeout=0))
        assert found is not None
        assert found[0] == Label("f")
        assert verify_ham_cycle(g, found)

    def test_required_edge_elsewhere_is_rotated(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        found = search_ham(g, SearchConstraint(required_edge=(dihedral8.lookup("t"), Label("f")), timeout=0))
        assert found is not None
        assert verify_ham_cycle(g, found)

    def test_unavailable_required_label(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        assert search_ham(g, SearchConstraint(required_edge=(0, Label("f", -1)), timeout=0)) is None

    def test_forbidding_a_generator_disconnects(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        assert search_ham(g, SearchConstraint(forbidden_labels=frozenset({"f"}), timeout=0)) is None

    def test_forbidding_one_direction(self):
        g = cayley(_cyclic(5), "x, x^2")
        found = search_ham(g, SearchConstraint(forbidden_labels=frozenset({"x^-1"}), timeout=0))
        assert found is not None
        assert Label("x", -1) not in found

    def test_one_way_rotation(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        found = search_ham(g, SearchConstraint(forbidden_labels=frozenset({"t^-1"}), timeout=0))
        assert verify_ham_cycle(g, found)
        assert Label("t", -1) not in found

    def test_path_mode(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        found = search_ham(g, SearchConstraint(mode=SearchMode.Path, timeout=0))
        assert found is not None
        assert len(found) == 7
        assert verify_ham_path(g, found)

    def test_path_from_other_start(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        start = dihedral8.lookup("f")
        found = search_ham(g, SearchConstraint(mode=SearchMode.Path, start=start, timeout=0))
        assert verify_ham_path(g, found, start=start)

    def test_seed_is_deterministic(self, s4):
        g = cayley(s4, "a, b")
        first = search_ham(g, SearchConstraint(seed=1, timeout=0))
        second = search_ham(g, SearchConstraint(seed=1, timeout=0))
        assert first == second

    def test_without_pruning(self, quaternion8):
        g = cayley(quaternion8, "i, j")
        found = search_ham(g, SearchConstraint(prune=False, timeout=0))
        assert verify_ham_cycle(g, found)

    def test_parallel_workers(self, s4):
        g = cayley(s4, "a, b")
        found = search_ham(g, SearchConstraint(timeout=0), SearchCallbacks(max_workers=3))
        assert verify_ham_cycle(g, found)


class TestSmallGraphs:
    def test_single_vertex(self):
        G = _cyclic(1)
        g = build_cayley(G, {})
        assert search_ham(g, SearchConstraint(timeout=0)) == []

    def test_two_vertices(self):
        g = cayley(_cyclic(2), "x")
        found = search_ham(g, SearchConstraint(timeout=0))
        assert found == [Label("x"), Label("x")]
        assert verify_ham_cycle(g, found).degenerate


class TestQuotientSearch:
    def test_cycle_in_quotient(self, s4z2):
        g = cayley(s4z2, "(3,4), (1,2,3,4)(5,6)")
        H = subgroup_closure(s4z2, [s4z2.lookup("z")])
        qm = quotient_multigraph(g, H)
        found = search_ham(qm, SearchConstraint(timeout=0))
        assert found is not None
        assert len(found) == 24
        assert verify_quotient_cycle(qm, found)

    def test_two_coset_quotient_uses_distinct_edges(self):
        G = _cyclic(6)
        g = cayley(G, {"x": "x", "y": "x^3"})
        qm = quotient_multigraph(g, subgroup_closure(G, [G.lookup("x^2")]))
        found = search_ham(qm, SearchConstraint(timeout=0))
        assert verify_quotient_cycle(qm, found)
