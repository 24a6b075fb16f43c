"""
Tests for the lifting lemmas and the prism construction.
"""

import numpy as np
import pytest
from conftest import cayley

from hamcayley_cli.engine.assemble import assemble_group, resolve_element
from hamcayley_cli.engine.catalog import build
from hamcayley_cli.engine.cayley import build_cayley, double_edges, quotient_multigraph, verify_ham_cycle
from hamcayley_cli.engine.group import Label, evaluate
from hamcayley_cli.engine.lemmas import (
    CxLLemma,
    LemmaOutcome,
    NormalEasyLemma,
    coset_fgl,
    cited_router,
    cxl_product,
    cyclic_normal_2p,
    fgl_edge_variants,
    fgl_lift,
    multidouble,
    normal_easy,
    prism_cycle,
    rankin,
    rankin_skewed,
    stud71,
    switch_parallel,
)
from hamcayley_cli.engine.lemmas.cited import keating_witte, pk_subgroup
from hamcayley_cli.engine.search import SearchConstraint, search_ham
from hamcayley_cli.engine.subgroups import generates, subgroup_closure, sylow
from hamcayley_cli.engine.walk import parse_walk
from hamcayley_cli.exceptions import (
    HypothesisFailedError,
    NotCyclicError,
    NotNormalError,
    PrimeRequiredError,
)


@pytest.fixture
def z6():
    return assemble_group({"kind": "cyclic", "generator": "x", "order": 6})


@pytest.fixture
def z2_cubed():
    return assemble_group({
        "kind": "abelian",
        "factors": [{"name": "a", "order": 2}, {"name": "b", "order": 2}, {"name": "c", "order": 2}],
    })


# ---------------------------------------------------------------------------
# Prism cycles
# ---------------------------------------------------------------------------


def _adjacent(u, w, m):
    (i, j), (k, l) = u, w
    if j == l:
        return (i - k) % m in (1, m - 1)
    return i == k and abs(j - l) == 1


@pytest.mark.parametrize("m", range(3, 9))
@pytest.mark.parametrize("n", range(0, 9))
def test_prism_cycle_is_hamiltonian(m, n):
    cycle = prism_cycle(m, n)
    assert cycle[0] == (0, 0)
    assert len(cycle) == m * (n + 1)
    assert len(set(cycle)) == len(cycle)
    assert all(0 <= i < m and 0 <= j <= n for i, j in cycle)
    for u, w in zip(cycle, cycle[1:] + cycle[:1]):
        assert _adjacent(u, w, m), f"{u} -> {w} is not an edge"


def test_prism_cycle_rejects_small_arguments():
    with pytest.raises(ValueError):
        prism_cycle(1, 3)
    with pytest.raises(ValueError):
        prism_cycle(4, -1)


# ---------------------------------------------------------------------------
# Factor group lemma
# ---------------------------------------------------------------------------


class TestFGL:
    def test_lift(self, z6):
        g = cayley(z6, {"x": "x", "y": "x^3"})
        N = subgroup_closure(z6, [z6.lookup("x^2")])
        outcome = fgl_lift(z6, g, N, parse_walk("x, y"))
        assert outcome.applied
        assert outcome.strategy == "fgl"
        assert len(outcome.cycle) == 6
        assert outcome.witness["endpoint"] == "x^4"
        assert verify_ham_cycle(g, outcome.cycle)

    def test_endpoint_must_generate(self, z6):
        g = cayley(z6, {"x": "x", "y": "x^3"})
        N = subgroup_closure(z6, [z6.lookup("x^2")])
        outcome = fgl_lift(z6, g, N, parse_walk("x, x^-1"))
        assert not outcome.applied
        assert outcome.reason == "endpoint-does-not-generate"

    def test_invalid_quotient_cycle(self, z6):
        g = cayley(z6, {"x": "x", "y": "x^3"})
        N = subgroup_closure(z6, [z6.lookup("x^2")])
        outcome = fgl_lift(z6, g, N, parse_walk("x, y, x"))
        assert not outcome.applied
        assert outcome.reason.startswith("quotient-cycle-invalid")

    def test_requires_normal(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        H = subgroup_closure(dihedral8, [dihedral8.lookup("f")])
        with pytest.raises(NotNormalError):
            fgl_lift(dihedral8, g, H, parse_walk("t^3, f"))

    def test_requires_cyclic(self, z2_cubed):
        g = cayley(z2_cubed, "a, b, c")
        N = subgroup_closure(z2_cubed, [z2_cubed.lookup("a"), z2_cubed.lookup("b")])
        with pytest.raises(NotCyclicError):
            fgl_lift(z2_cubed, g, N, parse_walk("c, c"))
        with pytest.raises(NotCyclicError):
            coset_fgl(z2_cubed, g, N, parse_walk("c, c"))

    def test_coset_version_with_non_normal_subgroup(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        H = subgroup_closure(dihedral8, [dihedral8.lookup("f")])
        # cosets H, Ht, Ht², Ht³: t⁴ closes at e, which does not generate H
        outcome = coset_fgl(dihedral8, g, H, parse_walk("t^4"))
        assert not outcome.applied
        assert outcome.reason == "endpoint-does-not-generate"


# ---------------------------------------------------------------------------
# Normal cyclic subgroups
# ---------------------------------------------------------------------------


class TestNormalEasy:
    def test_central_involution(self, s4z2):
        g = cayley(s4z2, "(3,4), (1,2,3), (5,6)")
        outcome = normal_easy(s4z2, g, Label("(5,6)"))
        assert outcome.applied
        assert outcome.witness["central"] is True
        assert outcome.witness["order"] == 2
        assert len(outcome.cycle) == 48
        assert verify_ham_cycle(g, outcome.cycle)

    def test_generator_of_whole_group(self):
        Z7 = assemble_group({"kind": "cyclic", "generator": "x", "order": 7})
        outcome = normal_easy(Z7, cayley(Z7, "x"), "x")
        assert outcome.applied
        assert outcome.cycle == parse_walk("x^7")

    def test_not_normal(self, dihedral8):
        with pytest.raises(HypothesisFailedError):
            normal_easy(dihedral8, cayley(dihedral8, "t, f"), "f")

    def test_neither_central_nor_prime(self, dihedral8):
        with pytest.raises(HypothesisFailedError):
            normal_easy(dihedral8, cayley(dihedral8, "t, f"), "t")

    def test_router_prefers_central_generators(self, s4z2):
        g = cayley(s4z2, "(3,4), (1,2,3), (5,6)")
        outcome = NormalEasyLemma.attempt(s4z2, g)
        assert outcome.applied
        assert outcome.witness["generator"] == "(5,6)"

    def test_router_reports_failure(self, dihedral8):
        outcome = NormalEasyLemma.attempt(dihedral8, cayley(dihedral8, "t, f"))
        assert not outcome.applied
        assert outcome.reason.startswith("hypothesis-failed")


# ---------------------------------------------------------------------------
# Directed cycles
# ---------------------------------------------------------------------------


class TestRankin:
    def test_applies_to_dihedral(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        outcome = rankin(dihedral8, g, "t", "f")
        assert outcome.applied
        assert all(label.sign == 1 for label in outcome.cycle)
        assert verify_ham_cycle(g, outcome.cycle)

    def test_hypothesis_failure(self, quaternion8):
        # i j⁻¹ has order 4
        with pytest.raises(HypothesisFailedError):
            rankin(quaternion8, cayley(quaternion8, "i, j"), "i", "j")


def test_outcome_to_dict():
    outcome = LemmaOutcome.fail("fgl", "endpoint-does-not-generate", endpoint="e")
    data = outcome.to_dict()
    assert data == {
        "strategy": "fgl",
        "applied": False,
        "cycle": None,
        "length": None,
        "witness": {"endpoint": "e"},
        "reason": "endpoint-does-not-generate",
    }


# ---------------------------------------------------------------------------
# Edge variants of the factor group lemma
# ---------------------------------------------------------------------------


class TestFGLEdgeVariants:
    def test_swap_for_a_generator_congruent_mod_n(self, s4z2):
        g = cayley(s4z2, {"a": "(3,4)", "b": "(3,4)(5,6)", "c": "(1,2,3)"})
        N = subgroup_closure(s4z2, [resolve_element(s4z2, "(5,6)")])
        outcome = fgl_edge_variants(s4z2, g, N, "a", "gen-twice")
        assert outcome.applied
        assert outcome.strategy == "fgl-gen-twice"
        assert len(outcome.cycle) == 48
        assert verify_ham_cycle(g, outcome.cycle)

    def test_square_generates_n(self):
        G = build("48.S4hat")
        g = cayley(G, {"x": "x", "y i": "y i"})
        N = subgroup_closure(G, [resolve_element(G, "x^2")])
        outcome = fgl_edge_variants(G, g, N, "x", "order2")
        assert outcome.applied
        assert outcome.strategy == "fgl-order2"
        assert verify_ham_cycle(g, outcome.cycle)

    def test_square_outside_n(self, s4z2):
        g = cayley(s4z2, {"a": "(3,4)", "b": "(3,4)(5,6)", "c": "(1,2,3)"})
        N = subgroup_closure(s4z2, [resolve_element(s4z2, "(5,6)")])
        with pytest.raises(HypothesisFailedError):
            fgl_edge_variants(s4z2, g, N, "a", "order2")

    def test_order_must_be_a_prime_power(self, z6):
        N = subgroup_closure(z6, [z6.lookup("x")])
        with pytest.raises(HypothesisFailedError):
            fgl_edge_variants(z6, cayley(z6, "x"), N, "x")

    def test_requires_normal(self, dihedral8):
        H = subgroup_closure(dihedral8, [dihedral8.lookup("f")])
        with pytest.raises(NotNormalError):
            fgl_edge_variants(dihedral8, cayley(dihedral8, "t, f"), H, "t")


# ---------------------------------------------------------------------------
# Cyclic normal subgroup of order pq
# ---------------------------------------------------------------------------


class TestCyclicNormal2p:
    def test_central_generator_is_routed(self):
        G = assemble_group({
            "kind": "abelian",
            "factors": [{"name": "x", "order": 6}, {"name": "y", "order": 4}],
        })
        g = cayley(G, "x, y")
        outcome = cyclic_normal_2p(G, g, "x", 3, 2)
        assert outcome.applied
        assert outcome.strategy == "cyclic-normal-2p"
        assert outcome.witness["routed"] == "normal-easy"
        assert len(outcome.cycle) == 24
        assert verify_ham_cycle(g, outcome.cycle)

    def test_primes_must_be_distinct(self, z6):
        with pytest.raises(HypothesisFailedError, match="distinct primes"):
            cyclic_normal_2p(z6, cayley(z6, "x"), "x", 3, 3)

    def test_q_must_divide_the_index(self, z6):
        with pytest.raises(HypothesisFailedError, match="does not divide"):
            cyclic_normal_2p(z6, cayley(z6, "x"), "x", 2, 3)


# ---------------------------------------------------------------------------
# Double edges in a prime-order coset multigraph
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def group80():
    return build("80.Z5xZ2^4")


class TestMultiDouble:
    def test_lifts_through_a_double_edge(self, group80):
        g = cayley(group80, {"x": "x", "x^2 v": "x^2 v"})
        P = subgroup_closure(group80, [group80.lookup("x")])
        outcome = multidouble(group80, g, P)
        assert outcome.applied
        assert outcome.strategy == "multidouble"
        first, second = outcome.witness["endpoints"]
        assert first != second
        assert len(outcome.cycle) == 80
        assert verify_ham_cycle(g, outcome.cycle)

    def test_subgroup_order_must_be_prime(self, group80):
        H = subgroup_closure(group80, [group80.lookup("x"), group80.lookup("v")])
        with pytest.raises(PrimeRequiredError):
            multidouble(group80, cayley(group80, "x, x^2 v"), H)


def _generating_pairs(G, count, seed):
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        a, b = (int(v) for v in rng.integers(1, G.order, size=2))
        if generates(G, [a, b]):
            pairs.append((a, b))
    return pairs


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_parallel_edges_give_distinct_endpoints(group80, seed):
    for a, b in _generating_pairs(group80, 2, seed):
        g = build_cayley(group80, [a, b])
        for H in sylow(group80, 5)[:2]:
            qm = quotient_multigraph(g, H)
            for edge in double_edges(qm)[:3]:
                cycle = search_ham(qm, SearchConstraint(required_edge=(edge.cosets[0], edge.labels[0])))
                if cycle is None:
                    continue
                other = switch_parallel(qm, cycle, edge)
                if other is None:
                    continue
                e1 = evaluate(group80, cycle, g.genset)
                e2 = evaluate(group80, other, g.genset)
                assert e1 != e2
                assert e1 in H.members and e2 in H.members
            outcome = multidouble(group80, g, H)
            assert outcome.reason != "endpoint-dichotomy-violated"
            if outcome.applied:
                assert len(outcome.cycle) == 80
                assert verify_ham_cycle(g, outcome.cycle)


# ---------------------------------------------------------------------------
# Prisms over an abelian subgroup
# ---------------------------------------------------------------------------


class TestCxL:
    def test_rotations_of_a_dihedral_group(self, dihedral16):
        g = cayley(dihedral16, "t, f")
        outcome = cxl_product(dihedral16, g, ["t"])
        assert outcome.applied
        assert outcome.witness["subgroup_order"] == 8
        assert (outcome.witness["m"], outcome.witness["n"]) == (8, 1)
        assert verify_ham_cycle(g, outcome.cycle)

    def test_subgroup_neither_centralized_nor_inverted(self, group80):
        with pytest.raises(HypothesisFailedError):
            cxl_product(group80, cayley(group80, "x, x^2 v"), ["x"])

    def test_router_on_permutation_names(self, s4z2):
        outcome = CxLLemma.attempt(s4z2, cayley(s4z2, "(1,2), (1,2,3,4)(5,6)"))
        assert not outcome.applied
        assert outcome.reason.startswith("hypothesis-failed")


# ---------------------------------------------------------------------------
# Skewed directed cycles and minimal generating sets
# ---------------------------------------------------------------------------


class TestRankinSkewed:
    def test_interleaves_t(self, s4z2):
        g = cayley(s4z2, {"a": "(3,4)", "b": "(2,3)", "c": "(1,2)(5,6)"})
        outcome = rankin_skewed(s4z2, g, "b", "c", "a")
        assert outcome.applied
        assert outcome.witness["subgroup_order"] == 24
        assert all(label.name == "b" for label in outcome.cycle[1::2])
        assert verify_ham_cycle(g, outcome.cycle)

    def test_index_must_be_two(self, s4z2):
        g = cayley(s4z2, {"a": "(3,4)", "b": "(2,3)", "c": "(1,2)(5,6)"})
        with pytest.raises(HypothesisFailedError):
            rankin_skewed(s4z2, g, "c", "a", "b")


class TestStud71:
    def test_minimal_generating_set(self, s4z2):
        g = cayley(s4z2, {"a": "(3,4)", "b": "(2,3)(5,6)", "c": "(1,2)(3,4)"})
        outcome = stud71(s4z2, g, "a", "b")
        assert outcome.applied
        assert outcome.witness["order_s1s2"] == 6
        assert outcome.witness["subgroup_order"] == 8
        assert verify_ham_cycle(g, outcome.cycle)

    @pytest.mark.parametrize(
        "genset",
        [
            {"a": "(3,4)", "b": "(2,3,4)", "c": "(1,2)(5,6)"},
            {"a": "(2,3,4)", "b": "(1,2)(3,4)(5,6)", "c": "(1,2,3,4)"},
        ],
    )
    def test_listed_minimal_sets(self, s4z2, genset):
        g = cayley(s4z2, genset)
        outcome = stud71(s4z2, g, "a", "b")
        assert outcome.applied
        assert len(outcome.cycle) == 48
        assert verify_ham_cycle(g, outcome.cycle)

    def test_same_generator_twice(self, s4z2):
        g = cayley(s4z2, {"a": "(3,4)", "b": "(2,3)(5,6)", "c": "(1,2)(3,4)"})
        with pytest.raises(HypothesisFailedError):
            stud71(s4z2, g, "a", "a")


# ---------------------------------------------------------------------------
# Cited existence theorems
# ---------------------------------------------------------------------------


class TestCited:
    def test_cyclic_derived_subgroup(self, dihedral8):
        g = cayley(dihedral8, "t, f")
        assert keating_witte(dihedral8)
        outcome = cited_router(dihedral8, g)
        assert outcome.applied
        assert outcome.witness == {"theorem": "keating-witte", "route": "search-backed"}
        assert verify_ham_cycle(g, outcome.cycle)

    def test_differences_in_a_normal_p_subgroup(self, group80):
        x, v = group80.lookup("x"), group80.lookup("v")
        assert not keating_witte(group80)
        assert pk_subgroup(group80, {"x": x, "x v": group80.mul(x, v)})
        assert not pk_subgroup(group80, {"x": x, "x^2 v": group80.mul(group80.power(x, 2), v)})

    def test_nothing_applies(self, s4):
        outcome = cited_router(s4, cayley(s4, "a, b"))
        assert not outcome.applied
        assert outcome.reason == "none-applicable"
