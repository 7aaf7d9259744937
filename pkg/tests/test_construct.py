"""Group constructors, actions, and the catalog."""

import pytest

from mnlab import (GroupSpec, all_subgroups, alternating, catalog, core,
                   coset_action, cyclic, dihedral, direct_product, is_dihedral,
                   klein, quaternion, regular_action, symmetric)
from mnlab.perm import PermGroup


class TestConstructors:
    @pytest.mark.parametrize("m,order", [(2, 4), (3, 6), (5, 10), (12, 24)])
    def test_dihedral_orders(self, m, order):
        assert dihedral(m).order == order

    def test_dihedral_3_equals_s3(self):
        assert dihedral(3) == symmetric(3)

    def test_dihedral_2_is_regular_klein(self):
        G = dihedral(2)
        assert G.degree == 4 and G.order == 4
        assert G == klein()
        assert G.is_transitive()

    def test_dihedral_rejects_small_m(self):
        with pytest.raises(ValueError):
            dihedral(1)

    @pytest.mark.parametrize("n,order", [(1, 1), (4, 4), (7, 7)])
    def test_cyclic(self, n, order):
        assert cyclic(n).order == order

    def test_symmetric_and_alternating(self):
        assert symmetric(4).order == 24
        assert alternating(4).order == 12
        assert alternating(4).is_subgroup_of(symmetric(4))

    def test_quaternion(self):
        Q = quaternion()
        assert Q.order == 8 and Q.degree == 8
        involutions = [p for p in Q if not p.is_identity() and (p * p).is_identity()]
        assert len(involutions) == 1  # unique element of order 2
        assert is_dihedral(Q) is None

    def test_direct_product_orders(self):
        assert direct_product(cyclic(2), cyclic(3)).order == 6
        assert direct_product(klein(), symmetric(3)).order == 24


class TestRegularAction:
    def test_s3_regular(self):
        R = regular_action(symmetric(3))
        assert R.degree == 6 and R.order == 6
        assert R.is_transitive()
        assert all(R.point_stabilizer(x).order == 1 for x in range(6))

    def test_trivial_group(self):
        R = regular_action(PermGroup.trivial(3))
        assert R.degree == 1 and R.order == 1

    def test_klein_regular_gens_are_double_transpositions(self):
        R = regular_action(klein())
        assert sorted(g.images for g in R.generators) == [(1, 0, 3, 2), (2, 3, 0, 1)]

    @pytest.mark.parametrize("G", [cyclic(5), dihedral(4), quaternion(),
                                   symmetric(3)])
    def test_regular_properties(self, G):
        R = regular_action(G)
        assert R.order == G.order and R.degree == G.order
        assert R.is_transitive()
        assert all(R.point_stabilizer(x).order == 1 for x in range(R.degree))


class TestCosetAction:
    def test_s3_mod_point_stabilizer_is_natural(self):
        G = symmetric(3)
        H = next(K for K in all_subgroups(G) if K.order == 2)
        act, ker = coset_action(G, H)
        assert act.degree == 3 and act == G
        assert ker.order == 1

    def test_s3_mod_a3(self):
        G = symmetric(3)
        A3 = next(K for K in all_subgroups(G) if K.order == 3)
        act, ker = coset_action(G, A3)
        assert act.degree == 2 and act.order == 2
        assert ker == A3

    def test_trivial_subgroup_gives_regular_action(self):
        G = symmetric(3)
        triv = all_subgroups(G)[0]
        act, ker = coset_action(G, triv)
        assert act == regular_action(G)
        assert ker.order == 1

    @pytest.mark.parametrize("G", [g for _, g in catalog(12)])
    def test_kernel_equals_core(self, G):
        for H in all_subgroups(G):
            act, ker = coset_action(G, H)
            assert ker == core(G, H)
            assert act.degree == G.order // H.order
            assert (ker.order == 1) == (act.order == G.order)


class TestCatalog:
    def test_max_order_1(self):
        cat = catalog(1)
        assert [name for name, _ in cat] == ["Z1"]

    def test_max_order_6_members(self):
        names = [name for name, _ in catalog(6)]
        for want in ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "V4", "D6"]:
            assert want in names

    def test_max_order_8_has_q8_and_d8(self):
        names = [name for name, _ in catalog(8)]
        assert "Q8" in names and "D8" in names

    def test_entries_are_regular_and_unique(self):
        cat = catalog(16)
        keys = [G.key() for _, G in cat]
        assert len(set(keys)) == len(keys)
        for _, G in cat:
            assert G.order <= 16
            assert G.degree == G.order
            assert G.order == 1 or G.is_transitive()

    def test_dihedral_and_symmetric_dedup(self):
        # regular D6 and regular S3 are the same permutation group
        names = [name for name, _ in catalog(6)]
        assert "D6" in names and "S3" not in names

    def test_bound(self):
        with pytest.raises(ValueError, match="exceeds bound"):
            catalog(49)


class TestGroupSpec:
    @pytest.mark.parametrize("spec,order", [
        (GroupSpec("cyclic", 6), 6),
        (GroupSpec("dihedral", 4), 8),
        (GroupSpec("symmetric", 4), 24),
        (GroupSpec("klein"), 4),
        (GroupSpec("direct_product",
                   factors=(GroupSpec("cyclic", 3), GroupSpec("klein"))), 12),
    ])
    def test_build_matches_expected_order(self, spec, order):
        assert spec.expected_order() == order
        assert spec.build().order == order

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown kind"):
            GroupSpec("frobnicate").build()
