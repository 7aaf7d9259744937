"""Verification sweeps and their supporting enumeration machinery."""

import json

import pytest

from mnlab import (all_congruences, all_subgroups, check_lemma, check_theorem1,
                   check_theorem2, congruences_oracle, minimal_representation,
                   symmetric)
from mnlab.verify import (_atom_system_candidates, _conjugacy_class_reps,
                          _mn_of_congset, _orbit_count, _subgroup_records)

from oracles import maximal_descent_closure, subgroups_bounded_gen


class TestEnumeration:
    @pytest.mark.parametrize("d,count", [(2, 2), (3, 6), (4, 30)])
    def test_conjugacy_expanded_matches_plain(self, d, count):
        plain = {K._eset for K in all_subgroups(symmetric(d))}
        fast = set(_subgroup_records(symmetric(d)))
        assert plain == fast
        assert len(plain) == count

    def test_s5_both_routes_give_156(self):
        plain = {K._eset for K in all_subgroups(symmetric(5))}
        fast = set(_subgroup_records(symmetric(5)))
        assert plain == fast and len(plain) == 156

    def test_bounded_gen_oracle_spot_checks(self):
        from mnlab import cyclic, dihedral, quaternion, alternating
        for G in (cyclic(12), dihedral(6), quaternion(), alternating(4)):
            assert tuple(all_subgroups(G)) == subgroups_bounded_gen(G)

    def test_maximal_descent_reaches_everything(self):
        from mnlab import dihedral
        subs = all_subgroups(dihedral(6))
        assert maximal_descent_closure(subs) == {K._eset for K in subs}

    def test_class_reps_are_cycle_types(self):
        reps = _conjugacy_class_reps(7)
        assert len(reps) == 15  # integer partitions of 7
        reps5 = _conjugacy_class_reps(5)
        assert len(reps5) == 7

    def test_orbit_count(self):
        assert _orbit_count(4, (bytes((1, 0, 3, 2)),)) == 2
        assert _orbit_count(4, (bytes((1, 2, 3, 0)),)) == 1
        assert _orbit_count(3, ()) == 3

    def test_mn_of_congset(self):
        from mnlab import gset_algebra, regular_action, klein
        from mnlab.congruence import _congruence_set
        A = gset_algebra(regular_action(klein()))
        assert _mn_of_congset(_congruence_set(4, A.ops), 4) == 3
        assert _mn_of_congset({(0, 1, 2), (0, 0, 0)}, 3) is None


class TestLemmaSweep:
    def test_small_catalog_passes(self):
        report = check_lemma(max_order=8)
        assert report.status == "PASS"
        assert report.counterexamples == []
        assert all(f["ok"] for f in report.findings)
        # the regular Klein group over its trivial subgroup is a hit
        klein_hits = [f for f in report.findings
                      if f["group"] == "V4" and f["subgroup_order"] == 1]
        assert klein_hits and klein_hits[0]["n"] == 3
        assert klein_hits[0]["conclusions"]["quotient_dihedral_m"] == 2

    def test_findings_sorted_and_hypothesis_only(self):
        report = check_lemma(max_order=12)
        keys = [(f["group"], f["subgroup_key"]) for f in report.findings]
        assert keys == sorted(keys)
        for f in report.findings:
            assert f["index"] < 2 * f["n"]

    def test_max_order_bound(self):
        with pytest.raises(ValueError, match="exceeds bound"):
            check_lemma(max_order=49)

    def test_report_json_deterministic_up_to_timing(self):
        a = check_lemma(max_order=6).to_dict()
        b = check_lemma(max_order=6).to_dict()
        a.pop("timing_ms"), b.pop("timing_ms")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


class TestTheorem1:
    def test_p2_degree_up_to_4_finds_the_klein_hit(self):
        report = check_theorem1(2, max_degree=4)
        assert report.status == "PASS"
        assert len(report.witnesses) == 1
        w = report.witnesses[0]
        assert w["degree"] == 4 and w["order"] == 4
        assert w["regular"] and w["dihedral_m"] == 2

    def test_unsupported_p(self):
        with pytest.raises(ValueError, match="unsupported"):
            check_theorem1(5)

    def test_max_degree_validation(self):
        with pytest.raises(ValueError):
            check_theorem1(2, max_degree=6)


class TestTheorem2:
    def test_small_sizes_have_no_closed_systems(self):
        report = check_theorem2(3, max_size=4)
        assert report.status == "PASS"
        by_size = {f["size"]: f for f in report.findings}
        assert by_size[4]["candidate_systems"] == 34
        assert by_size[4]["closed_systems"] == 0
        assert by_size[2]["candidate_systems"] == 0
        assert by_size[3]["candidate_systems"] == 0

    def test_unsupported_parameters(self):
        with pytest.raises(ValueError, match="unsupported"):
            check_theorem2(5, max_size=4)
        with pytest.raises(ValueError):
            check_theorem2(3, max_size=9)

    def test_candidate_systems_are_atom_systems(self):
        from mnlab.partition import rgs_meet, rgs_join
        bottom = tuple(range(5))
        for combo in list(_atom_system_candidates(5, 4))[:50]:
            for i, a in enumerate(combo):
                for b in combo[i + 1:]:
                    assert rgs_meet(a, b) == bottom
            joined = combo[0]
            for r in combo[1:]:
                joined = rgs_join(joined, r)
            assert joined == (0,) * 5


class TestMinimalRepresentation:
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_witness_shape_and_oracle(self, p):
        A, L = minimal_representation(p)
        assert A.size == 2 * p
        assert len(A.ops) == 2
        assert L.detect_mn() == p + 1
        assert L.n == p + 3
        assert congruences_oracle(A) == L

    @pytest.mark.parametrize("p", [7, 11])
    def test_witness_shape_larger_primes(self, p):
        A, L = minimal_representation(p)
        assert A.size == 2 * p and L.detect_mn() == p + 1

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError, match="prime"):
            minimal_representation(6)

    def test_lattice_agrees_with_direct_computation(self):
        A, L = minimal_representation(3)
        assert all_congruences(A) == L
