import pytest
from hypothesis import given, settings

from morgan_unify import (
    MostGeneral,
    PreconditionError,
    SizeGuardError,
    classify,
    demorgan_core,
    enumerate_unifiers_bounded,
    find_null_pattern,
    is_projective_dual,
    is_solvable,
    kleene_core,
    more_general,
    mu_set,
    validate_involutive,
    validate_monotone_map,
    validate_poset,
    verify_null_pattern,
)
from morgan_unify.involutive import make_inv_morphism
from morgan_unify.unification import core_of

from strategies import invposets


class TestSolvability:
    def test_empty_poset_unsolvable(self):
        assert not is_solvable(validate_poset([], []), "bdl")

    def test_antichain_swap_unsolvable(self, antichain_swap):
        assert not is_solvable(antichain_swap, "demorgan")

    def test_diamond_solvable_kleene(self, diamond):
        assert is_solvable(diamond, "kleene")

    def test_variety_mismatch(self, antichain_swap, crown):
        with pytest.raises(PreconditionError):
            is_solvable(antichain_swap, "kleene")
        with pytest.raises(PreconditionError):
            is_solvable(crown, "demorgan")


class TestKleeneCore:
    def test_no_fixed_points_gives_empty_core(self):
        q = validate_involutive(
            validate_poset(["a", "b"], [("a", "b")]), {"a": "b", "b": "a"}
        )
        assert len(kleene_core(q)) == 0

    def test_separating_chain_unchanged(self):
        q = validate_involutive(
            validate_poset(["x", "z", "y"], [("x", "z"), ("z", "y")]),
            {"x": "y", "y": "x", "z": "z"},
        )
        core = kleene_core(q)
        assert core.elements == q.elements
        assert core.base.le == q.base.le

    def test_unseparated_pair_dropped(self):
        # x below y with x on the lower side, y on the upper side, and no
        # fixed point in between: the pair (and its mirror) must go
        q = validate_involutive(
            validate_poset(
                ["x", "z", "~x", "~y", "w", "y"],
                [("x", "z"), ("z", "~x"), ("x", "y"), ("~y", "~x"), ("~y", "w"), ("w", "y")],
            ),
            {"x": "~x", "~x": "x", "y": "~y", "~y": "y", "z": "z", "w": "w"},
        )
        core = kleene_core(q)
        assert set(core.elements) == set(q.elements)
        assert q.base.leq("x", "y") and not core.base.leq("x", "y")
        assert q.base.le - core.base.le == {("x", "y"), ("~y", "~x")}

    @given(invposets(max_size=4))
    @settings(max_examples=40)
    def test_core_is_kleene_with_m2_and_k2(self, iv):
        if not iv.is_kleene:
            return
        core = kleene_core(iv)
        if not core.elements:
            return
        from morgan_unify import condition_report

        rep = condition_report(core)
        assert core.is_kleene and rep.m2 and rep.k2


class TestDeMorganCore:
    def test_fixed_point_is_its_own_core(self, point):
        assert demorgan_core(point).elements == ("p",)

    def test_swap_antichain_core_empty(self, antichain_swap):
        assert len(demorgan_core(antichain_swap)) == 0

    def test_witnessed_membership(self):
        q = validate_involutive(
            validate_poset(
                ["y", "z", "a", "ia", "~y"],
                [("y", "z"), ("y", "a"), ("y", "ia"), ("z", "~y"), ("a", "~y"), ("ia", "~y")],
            ),
            {"y": "~y", "~y": "y", "z": "z", "a": "ia", "ia": "a"},
        )
        assert set(demorgan_core(q).elements) == set(q.elements)


class TestClassify:
    def test_diamond_poset_bdl_unitary(self, diamond):
        result = classify(diamond.base, "bdl")
        assert result.utype == "unitary"
        assert isinstance(result.certificate, MostGeneral)
        assert result.certificate.unifier.is_identity()

    def test_antichain_bdl_finitary(self):
        result = classify(validate_poset(["a", "b"], []), "bdl")
        assert result.utype == "finitary"
        domains = [m.dom.elements for m in result.certificate.members]
        assert domains == [("a",), ("b",)]

    def test_crown_bdl_nullary(self, crown):
        result = classify(crown, "bdl")
        assert result.utype == "nullary"
        cert = result.certificate
        assert cert.family == "bdl"
        assert cert.as_dict == {k: k for k in "xabcdy"}

    def test_unsolvable(self):
        result = classify(validate_poset([], []), "bdl")
        assert result == type(result)(False, None, None, None)

    def test_diamond_demorgan_kleene_unitary(self, diamond):
        for variety in ("demorgan", "kleene"):
            result = classify(diamond, variety)
            assert result.utype == "unitary"
            assert is_projective_dual(result.certificate.unifier.dom, variety)[0]

    def test_two_fixed_points_kleene_finitary(self):
        q = validate_involutive(validate_poset(["z1", "z2"], []), {"z1": "z1", "z2": "z2"})
        result = classify(q, "kleene")
        assert result.utype == "finitary"
        assert [m.dom.elements for m in result.certificate.members] == [("z1",), ("z2",)]

    def test_bounded_two_fixed_points_unitary(self):
        q = validate_involutive(
            validate_poset(
                ["x", "z1", "z2", "~x"],
                [("x", "z1"), ("x", "z2"), ("z1", "~x"), ("z2", "~x")],
            ),
            {"x": "~x", "~x": "x", "z1": "z1", "z2": "z2"},
        )
        assert classify(q, "kleene").utype == "unitary"

    def test_pattern_instances(self, pattern_instances):
        expected = {
            "k1": ("kleene", "k1"),
            "k2": ("kleene", "k2"),
            "m1": ("demorgan", "m1"),
            "m2": ("demorgan", "m2"),
        }
        for name, (variety, family) in expected.items():
            result = classify(pattern_instances[name], variety)
            assert result.utype == "nullary"
            assert result.certificate.family == family
            assert verify_null_pattern(
                result.core, family, result.certificate.as_dict
            )

    def test_k2_shape_as_demorgan_lands_on_m1(self, pattern_instances):
        # the interval already fails the lattice condition, so the De
        # Morgan case analysis certifies with the m1 family
        result = classify(pattern_instances["k2"], "demorgan")
        assert result.utype == "nullary"
        assert result.certificate.family == "m1"

    def test_smallest_nullary_instance_is_the_m2_shape(self, pattern_instances):
        # sweeping all involutive posets with at most five points finds a
        # single nullary class, and it is the m2 configuration
        from morgan_unify import enumerate_invposets_upto, find_inv_isomorphism

        nullary = []
        for iv in enumerate_invposets_upto(5):
            if is_solvable(iv, "demorgan"):
                if classify(iv, "demorgan").utype == "nullary":
                    nullary.append(iv)
            if iv.is_kleene and is_solvable(iv, "kleene"):
                assert classify(iv, "kleene").utype != "nullary"
        assert len(nullary) == 1
        assert find_inv_isomorphism(nullary[0], pattern_instances["m2"]) is not None


class TestMuSet:
    def test_antichain_two_singletons(self):
        members = mu_set(validate_poset(["a", "b"], []), "bdl")
        assert [m.dom.elements for m in members] == [("a",), ("b",)]

    def test_two_two_chains(self):
        q = validate_poset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        members = mu_set(q, "bdl")
        assert [m.dom.elements for m in members] == [("a", "b"), ("c", "d")]
        for m in members:
            m.check()

    def test_rejected_on_unitary_instance(self, diamond):
        with pytest.raises(PreconditionError):
            mu_set(diamond.base, "bdl")
        with pytest.raises(PreconditionError):
            mu_set(diamond, "kleene")

    def test_members_pairwise_incomparable(self):
        q = validate_poset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        members = mu_set(q, "bdl")
        for i, u in enumerate(members):
            for j, v in enumerate(members):
                if i != j:
                    assert not more_general(u, v)

    def test_domains_are_projective(self):
        q = validate_involutive(validate_poset(["z1", "z2"], []), {"z1": "z1", "z2": "z2"})
        for m in mu_set(q, "kleene"):
            assert is_projective_dual(m.dom, "kleene")[0]


class TestNullPatterns:
    def test_crown_bdl_tuple(self, crown):
        anchors = find_null_pattern(crown, "bdl")
        assert anchors == {k: k for k in "xabcdy"}
        assert verify_null_pattern(crown, "bdl", anchors)

    def test_diamond_has_no_m1_pattern(self, diamond):
        assert find_null_pattern(diamond, "m1") is None

    def test_k1_tuple_on_its_instance(self, pattern_instances):
        anchors = find_null_pattern(pattern_instances["k1"], "k1")
        assert anchors == {k: k for k in "xabcdyz"}

    def test_m3_tuple_findable_directly(self, pattern_instances):
        anchors = find_null_pattern(pattern_instances["k2"], "m3")
        assert anchors is not None
        assert verify_null_pattern(pattern_instances["k2"], "m3", anchors)

    def test_negative_clause_rechecked(self, crown):
        bad = {k: k for k in "xabcdy"}
        bad["c"] = "y"  # an element now sits between a, b and y, d
        assert not verify_null_pattern(crown, "bdl", bad)


class TestMoreGeneral:
    def test_reflexive(self, crown):
        u = validate_monotone_map(validate_poset(["p"], []), crown, {"p": "x"})
        assert more_general(u, u)

    def test_interval_inclusion_dominates(self):
        q = validate_poset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        first, second = mu_set(q, "bdl")
        u = validate_monotone_map(validate_poset(["p"], []), q, {"p": "a"})
        assert more_general(first, u)
        assert not more_general(u, first)
        assert not more_general(second, u)

    def test_codomain_mismatch(self, crown, diamond):
        u = validate_monotone_map(validate_poset(["p"], []), crown, {"p": "x"})
        v = validate_monotone_map(validate_poset(["p"], []), diamond.base, {"p": "2"})
        with pytest.raises(PreconditionError):
            more_general(u, v)


class TestBoundedEnumeration:
    def test_point_instance_kleene(self, point):
        assert sum(1 for _ in enumerate_unifiers_bounded(point, "kleene", 1)) == 1

    def test_antichain_bdl_bound_one(self):
        q = validate_poset(["a", "b"], [])
        assert sum(1 for _ in enumerate_unifiers_bounded(q, "bdl", 1)) == 2

    def test_diamond_demorgan_contains_self_morphisms(self, diamond):
        from morgan_unify import enumerate_inv_morphisms, find_inv_isomorphism

        unifiers = list(enumerate_unifiers_bounded(diamond, "demorgan", 4))
        d_shaped = [
            u
            for u in unifiers
            if len(u.dom) == 4 and find_inv_isomorphism(u.dom, diamond) is not None
        ]
        self_morphisms = list(enumerate_inv_morphisms(diamond, diamond))
        assert len(d_shaped) == len(self_morphisms) == 6

    def test_guard(self, diamond):
        with pytest.raises(SizeGuardError):
            next(enumerate_unifiers_bounded(diamond, "demorgan", 6))


class TestCoreLemmaExecutableHalf:
    def test_unifiers_land_in_core(self, pattern_instances):
        for name, variety in [("k1", "kleene"), ("m1", "demorgan"), ("m2", "demorgan")]:
            q = pattern_instances[name]
            core = core_of(q, variety)
            core_elems = frozenset(core.elements)
            for u in enumerate_unifiers_bounded(q, variety, 3):
                assert u.image <= core_elems
                into_core = make_inv_morphism(u.dom, core, u.as_dict)
                into_core.check()
