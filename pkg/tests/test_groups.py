from fractions import Fraction

import pytest

from finsym.groups import (
    Character,
    FiniteAbelianGroup,
    FiniteGroup,
    abelian_cayley,
    characters,
    conjugacy_classes,
    cyclic_group,
    dihedral_group_4,
    direct_product,
    dual_group,
    named_group,
    parse_abelian,
    quaternion_group_8,
    symmetric_group_3,
)


class TestFiniteAbelianGroup:
    def test_divisibility_enforced(self):
        with pytest.raises(ValueError):
            FiniteAbelianGroup([4, 2])
        with pytest.raises(ValueError):
            FiniteAbelianGroup([1])
        assert FiniteAbelianGroup([2, 6]).order == 12
        assert FiniteAbelianGroup().order == 1

    def test_from_cyclic_orders(self):
        assert FiniteAbelianGroup.from_cyclic_orders([2, 3]) == FiniteAbelianGroup([6])
        assert FiniteAbelianGroup.from_cyclic_orders([6, 4]) == FiniteAbelianGroup([2, 12])
        assert FiniteAbelianGroup.from_cyclic_orders([2, 2]) == FiniteAbelianGroup([2, 2])
        assert FiniteAbelianGroup.from_cyclic_orders([1, 1]) == FiniteAbelianGroup()

    def test_arithmetic(self):
        g = FiniteAbelianGroup([2, 4])
        assert g.add((1, 3), (1, 2)) == (0, 1)
        assert g.neg((1, 3)) == (1, 1)
        assert g.scalar_mul(3, (1, 2)) == (1, 2)
        assert g.element_order((0, 2)) == 2
        assert g.element_order((1, 1)) == 4

    def test_subgroup_closure(self):
        g = FiniteAbelianGroup([2, 4])
        sub = g.subgroup([(0, 2), (1, 0)])
        assert sub == ((0, 0), (0, 2), (1, 0), (1, 2))
        assert g.subgroup([]) == ((0, 0),)

    def test_json_round_trip(self):
        g = FiniteAbelianGroup([2, 6])
        assert FiniteAbelianGroup.from_json(g.to_json()) == g

    def test_parse(self):
        assert parse_abelian("Z2xZ4") == FiniteAbelianGroup([2, 4])
        assert parse_abelian("Z4xZ2") == FiniteAbelianGroup([2, 4])
        assert parse_abelian("trivial").order == 1


class TestDualAndCharacters:
    def test_dual_preserves_invariant_factors(self):
        for factors in ((4,), (), (2, 6)):
            g = FiniteAbelianGroup(factors)
            assert dual_group(g).invariant_factors == g.invariant_factors

    def test_character_count(self):
        g = FiniteAbelianGroup([2, 6])
        assert len(list(characters(g))) == 12

    def test_character_values_are_exact(self):
        g = FiniteAbelianGroup([4])
        chi = Character(g, (1,))
        assert chi.value((1,)) == Fraction(1, 4)
        assert chi.value((3,)) == Fraction(3, 4)
        assert Character(g, (2,)).value((2,)) == 0

    def test_pairing_nondegenerate(self):
        # for every nonidentity a there is a character not vanishing on it
        for factors in ((2,), (3,), (2, 2), (2, 4), (2, 6)):
            g = FiniteAbelianGroup(factors)
            for a in g.elements():
                if a == g.zero():
                    continue
                assert any(chi.value(a) != 0 for chi in characters(g))

    def test_character_product(self):
        g = FiniteAbelianGroup([2, 4])
        chi = Character(g, (1, 1)) * Character(g, (1, 3))
        assert chi.exponents == (0, 0)
        assert chi.is_trivial()


class TestFiniteGroup:
    def test_validation_rejects_broken_tables(self):
        with pytest.raises(ValueError):
            FiniteGroup([[0, 0], [1, 1]], 0)  # not a Latin square
        with pytest.raises(ValueError):
            FiniteGroup([[1, 0], [0, 1]], 0)  # identity is not a unit

    def test_presets_are_groups(self):
        for g in (cyclic_group(5), symmetric_group_3(), dihedral_group_4(),
                  quaternion_group_8()):
            assert g.mul(g.identity, 1) == 1
            for i in range(g.order):
                assert g.mul(i, g.inv(i)) == g.identity

    def test_abelianness(self):
        assert cyclic_group(6).is_abelian()
        assert not symmetric_group_3().is_abelian()
        assert not quaternion_group_8().is_abelian()

    def test_direct_product_order(self):
        g = direct_product(cyclic_group(2), cyclic_group(2))
        assert g.order == 4 and g.is_abelian()

    def test_abelian_cayley_matches(self):
        g = abelian_cayley(FiniteAbelianGroup([2, 2]))
        assert g.order == 4 and g.is_abelian()

    def test_named_groups(self):
        assert named_group("Z2xZ4").order == 8
        assert named_group("S3").order == 6
        with pytest.raises(ValueError):
            named_group("E8")

    def test_json_round_trip(self):
        g = symmetric_group_3()
        assert FiniteGroup.from_json(g.to_json()) == g

    def test_preset_documents(self):
        from finsym.groups import preset_group_documents

        docs = preset_group_documents()
        assert set(docs) == {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}
        for name, text in docs.items():
            assert FiniteGroup.from_json(text) == named_group(name)


class TestConjugacyClasses:
    def test_cyclic_three_singletons(self):
        assert conjugacy_classes(cyclic_group(3)) == ((0,), (1,), (2,))

    def test_s3_class_sizes(self):
        sizes = sorted(len(c) for c in conjugacy_classes(symmetric_group_3()))
        assert sizes == [1, 2, 3]

    def test_q8_class_sizes(self):
        sizes = sorted(len(c) for c in conjugacy_classes(quaternion_group_8()))
        assert sizes == [1, 1, 2, 2, 2]

    def test_d4_class_sizes(self):
        sizes = sorted(len(c) for c in conjugacy_classes(dihedral_group_4()))
        assert sizes == [1, 1, 2, 2, 2]

    def test_identity_class_is_singleton(self):
        for name in ("Z2", "S3", "D4", "Q8"):
            g = named_group(name)
            classes = conjugacy_classes(g)
            assert (g.identity,) in classes

    def test_abelian_class_count_equals_order(self):
        for name in ("Z2", "Z3", "Z2xZ2", "Z2xZ4"):
            g = named_group(name)
            assert len(conjugacy_classes(g)) == g.order

    def test_classes_partition_the_group(self):
        g = quaternion_group_8()
        classes = conjugacy_classes(g)
        flat = sorted(i for c in classes for i in c)
        assert flat == list(range(g.order))
