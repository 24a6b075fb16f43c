"""
Tests for the group catalog and the order-16p enumeration.
"""

from itertools import combinations

import pytest

from hamcayley_cli.engine.catalog import (
    ActionMatrix,
    CatalogFamily,
    CatalogId,
    build,
    build_exceptional,
    build_order16,
    catalog_entries,
    catalog_id,
    companion,
    companion_action_check,
    enumerate_16p,
    list_groups,
    listed_gensets,
    summarize,
)
from hamcayley_cli.engine.group import element_orders, order_of
from hamcayley_cli.engine.morphisms import isomorphic
from hamcayley_cli.engine.subgroups import center, derived_subgroup, frattini, quotient, sylow
from hamcayley_cli.exceptions import DimensionMismatchError, PrimeRequiredError, UnknownGroupError


class TestOrder16:
    def test_fourteen_groups(self):
        entries = catalog_entries(CatalogFamily.Order16)
        assert len(entries) == 14
        groups = [build_order16(e.key) for e in entries]
        assert all(G.order == 16 for G in groups)
        assert sum(1 for G in groups if not G.is_abelian()) == 9

    def test_pairwise_non_isomorphic(self):
        groups = [build(e.key) for e in catalog_entries(CatalogFamily.Order16)]
        for G, H in combinations(groups, 2):
            assert isomorphic(G, H) is None, f"{G.name} ≅ {H.name}"

    def test_dihedral_structure(self, dihedral16):
        assert center(dihedral16).order == 2
        assert derived_subgroup(dihedral16).order == 4

    def test_wrong_family(self):
        with pytest.raises(UnknownGroupError):
            build_order16("48.S4xZ2")
        with pytest.raises(UnknownGroupError):
            build_exceptional("16.dihedral")


class TestBuild:
    def test_build_is_cached(self):
        assert build("16.quaternion") is build("16.quaternion")
        assert build(catalog_id("16.quaternion")) is build("16.quaternion")

    def test_unknown_key(self):
        with pytest.raises(UnknownGroupError):
            build("16.nonexistent")
        with pytest.raises(UnknownGroupError):
            catalog_id("16.nonexistent")

    @pytest.mark.parametrize(
        "key,order",
        [("48.Z3:Z4^2", 48), ("48.Z2:SL2(3)", 48), ("48.GL2(3)", 48), ("48.S4hat", 48),
         ("80.Z5xZ2^4", 80), ("112.Z7xZ2^3xZ2", 112)],
    )
    def test_exceptional_orders(self, key, order):
        assert build_exceptional(key).order == order

    def test_exceptional_groups_lack_a_normal_sylow(self):
        for entry in catalog_entries(CatalogFamily.Exceptional48):
            G = build(entry.key)
            assert len(sylow(G, 3)) > 1, entry.key

    def test_sylow_counts_80_and_112(self):
        assert len(sylow(build("80.Z5xZ2^4"), 5)) == 16
        assert len(sylow(build("112.Z7xZ2^3xZ2"), 7)) == 8

    def test_gl23_center(self):
        assert center(build("48.GL2(3)")).order == 2
        assert derived_subgroup(build("48.GL2(3)")).order == 24

    def test_listed_gensets(self):
        assert listed_gensets("48.Z4:A4") == [["a", "y"], ["a", "a y"], ["a", "a^2 y"]]
        assert listed_gensets("48.SL2(3)xZ2") == []
        assert listed_gensets("16.dihedral") is None
        assert listed_gensets("no-such-key") is None


class TestListing:
    def test_summary(self, s4z2):
        s = summarize(CatalogId(family=CatalogFamily.Exceptional48, key="48.S4xZ2"), s4z2)
        assert s.order == 48
        assert s.center == 2
        assert s.derived == 12
        assert s.normal_sylow == {2: False, 3: False}

    def test_list_by_order(self):
        summaries = list_groups(16)
        assert len(summaries) == 14
        assert {s.family for s in summaries} == {"order16"}

    def test_empty_order(self):
        assert list_groups(7) == []


class TestEnumerate16p:
    @pytest.mark.parametrize("p", [2, 9, 37])
    def test_rejects_bad_primes(self, p):
        with pytest.raises(PrimeRequiredError):
            enumerate_16p(p)

    @pytest.mark.slow
    def test_order_48(self):
        found = enumerate_16p(3)
        assert len(found) == 52
        non_normal = [cid for cid, G in found if len(sylow(G, 3)) > 1]
        assert len(non_normal) == 10
        assert all(G.order == 48 for _, G in found)

    @pytest.mark.slow
    def test_order_80(self):
        found = enumerate_16p(5)
        assert len(found) == 52
        assert sum(1 for _, G in found if len(sylow(G, 5)) > 1) == 1

    @pytest.mark.slow
    def test_semidirect_ids_rebuild(self):
        for cid, G in enumerate_16p(3)[:5]:
            assert build(cid) is G

    @pytest.mark.slow
    def test_derived_subgroup_facts_at_order_48(self):
        checked = 0
        for cid, G in enumerate_16p(3):
            if cid.family != CatalogFamily.Semidirect16p:
                continue
            Q = build(cid.key.split(".", 1)[1].rsplit(":Z", 1)[0])
            acting = any(u != 1 for k, u in cid.parameters.items() if k.startswith("u_"))
            if Q.is_abelian() or not acting:
                continue
            D = derived_subgroup(G)
            assert D.is_cyclic() and D.order in (6, 12), cid.key
            two_part = {g for g in D.members if 4 % order_of(G, g) == 0}
            assert two_part <= set(frattini(G).members), cid.key
            A, _ = quotient(G, D)
            assert (A.order, max(element_orders(A))) in {(4, 2), (8, 4), (8, 2)}, cid.key
            checked += 1
        assert checked > 0

    @pytest.mark.slow
    def test_order_112(self):
        found = enumerate_16p(7)
        assert len(found) == 43
        assert [cid.key for cid, G in found if len(sylow(G, 7)) > 1] == ["112.Z7xZ2^3xZ2"]


class TestExceptionalStructure:
    @pytest.mark.parametrize("key,center_order,derived_order", [("80.Z5xZ2^4", 1, 16), ("112.Z7xZ2^3xZ2", 2, 8)])
    def test_center_and_derived(self, key, center_order, derived_order):
        G = build(key)
        assert center(G).order == center_order
        assert derived_subgroup(G).order == derived_order

    @pytest.mark.parametrize("key", ["80.Z5xZ2^4", "112.Z7xZ2^3xZ2"])
    def test_sylow_2_is_normal_and_elementary(self, key):
        G = build(key)
        (P,) = sylow(G, 2)
        assert P.order == 16
        assert all(order_of(G, g) <= 2 for g in P.members)


# ---------------------------------------------------------------------------
# Companion matrices
# ---------------------------------------------------------------------------


QUARTIC = [1, 1, 1, 1, 1]
CUBIC = [1, 0, 1, 1]


class TestCompanion:
    def test_quartic_matches_the_manifest(self):
        M = companion(QUARTIC)
        assert M == ActionMatrix.from_rows([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]])
        assert M.multiplicative_order() == 5

    def test_cubic_has_order_seven(self):
        assert companion(CUBIC).multiplicative_order() == 7

    @pytest.mark.parametrize("coeffs", [QUARTIC, CUBIC])
    def test_polynomial_is_minimal(self, coeffs):
        assert companion_action_check(companion(coeffs), coeffs)

    def test_polynomial_that_does_not_annihilate(self):
        # λ⁴ + 1 = (λ + 1)⁴ over F2
        assert not companion_action_check(companion(QUARTIC), [1, 0, 0, 0, 1])

    def test_proper_divisor_annihilates(self):
        identity = ActionMatrix.identity(2)
        assert companion_action_check(identity, [1, 1])
        assert not companion_action_check(identity, [1, 0, 1])

    def test_degree_above_size(self):
        with pytest.raises(DimensionMismatchError):
            companion_action_check(ActionMatrix.identity(2), CUBIC)
