import pytest
from sympy import factorint

from src.classical import classical_group, m10
from src.constructions import alternating_group, cyclic_group, direct_product, metacyclic_affine, metacyclic_kernel, symmetric_group
from src.errors import CapExceededError, NotInGroupError, NotNormalError
from src.permcore import build_chain, from_cycles, identity, is_p_element
from src.quotients import (
    chief_series,
    conjugacy_class_reps,
    derived_series,
    derived_subgroup,
    intersection,
    is_abelian,
    is_characteristically_simple_order,
    is_normal,
    is_perfect,
    is_solvable,
    minimal_normal_subgroup,
    non_abelian_factor_count,
    normal_closure,
    normal_core,
    o_p,
    quotient_by,
)


def klein_four():
    return build_chain([from_cycles(4, [(0, 1), (2, 3)]), from_cycles(4, [(0, 2), (1, 3)])])


class TestNormalStructure:
    def test_is_normal(self, sym4, alt4):
        assert is_normal(sym4, alt4)
        assert is_normal(sym4, klein_four())
        assert not is_normal(sym4, build_chain([from_cycles(4, [(0, 1)])]))

    def test_normal_closure(self, sym4):
        assert normal_closure(sym4, [from_cycles(4, [(0, 1)])]).order == 24
        assert normal_closure(sym4, [from_cycles(4, [(0, 1, 2)])]).order == 12
        assert normal_closure(sym4, [from_cycles(4, [(0, 1), (2, 3)])]).order == 4
        assert normal_closure(sym4, [identity(4)]).order == 1

    def test_normal_closure_rejects_outsider(self, alt4):
        with pytest.raises(NotInGroupError):
            normal_closure(alt4, [from_cycles(4, [(0, 1)])])

    def test_derived_series_of_s4(self, sym4):
        assert [g.order for g in derived_series(sym4)] == [24, 12, 4, 1]
        assert is_solvable(sym4)

    def test_a5_is_perfect(self, alt5):
        assert derived_subgroup(alt5).order == 60
        assert is_perfect(alt5)
        assert not is_solvable(alt5)

    def test_is_abelian(self, sym3):
        assert is_abelian(cyclic_group(6))
        assert is_abelian(klein_four())
        assert not is_abelian(sym3)

    def test_intersection(self, sym4, alt4):
        dihedral = build_chain([from_cycles(4, [(0, 1, 2, 3)]), from_cycles(4, [(0, 2)])])
        assert intersection(dihedral, alt4).order == 4
        assert intersection(sym4, alt4).same_group(alt4)

    def test_normal_core(self, sym4):
        dihedral = build_chain([from_cycles(4, [(0, 1, 2, 3)]), from_cycles(4, [(0, 2)])])
        assert normal_core(sym4, dihedral).same_group(klein_four())
        assert normal_core(sym4, build_chain([from_cycles(4, [(0, 1)])])).order == 1


class TestQuotients:
    def test_s4_mod_v4(self, sym4):
        quotient = quotient_by(sym4, klein_four())
        assert quotient.index == 6
        assert quotient.image.order == 6
        assert not is_abelian(quotient.image)
        assert quotient.reps[0] in quotient.kernel

    def test_projection_is_a_homomorphism(self, sym4):
        quotient = quotient_by(sym4, klein_four())
        elements = list(sym4.elements())
        for x in elements[::5]:
            for y in elements[::7]:
                assert quotient.project(x * y) == quotient.project(x) * quotient.project(y)

    def test_kernel_projects_to_identity(self, sym4):
        v4 = klein_four()
        quotient = quotient_by(sym4, v4)
        assert all(quotient.project(n).is_identity() for n in v4.elements())

    def test_lift_and_coset_index(self, sym4):
        quotient = quotient_by(sym4, klein_four())
        for k in quotient.image.elements():
            x = quotient.lift(k)
            assert quotient.project(x) == k
            assert quotient.coset_index(x) == k[0]

    def test_preimage(self, sym4):
        quotient = quotient_by(sym4, klein_four())
        a3 = derived_subgroup(quotient.image)
        assert quotient.preimage(a3).order == 12

    def test_trivial_quotient(self, alt4):
        quotient = quotient_by(alt4, alt4)
        assert quotient.index == 1
        assert quotient.image.order == 1

    def test_requires_normal(self, sym4):
        with pytest.raises(NotNormalError):
            quotient_by(sym4, build_chain([from_cycles(4, [(0, 1)])]))

    def test_index_cap(self, sym5):
        with pytest.raises(CapExceededError):
            quotient_by(sym5, build_chain([identity(5)]), cap=100)

    def test_metacyclic_quotient_is_cyclic(self):
        group = metacyclic_affine(7, 1, 3, 1)
        quotient = quotient_by(group, metacyclic_kernel(7, 1))
        assert quotient.image.order == 3
        assert is_abelian(quotient.image)


class TestConjugacyClasses:
    @pytest.mark.parametrize("n,sizes", [(3, [1, 2, 3]), (4, [1, 3, 6, 6, 8])])
    def test_class_sizes_of_symmetric_groups(self, n, sizes):
        assert sorted(size for _, size in conjugacy_class_reps(symmetric_group(n))) == sizes

    def test_a5_classes(self, alt5):
        assert sorted(size for _, size in conjugacy_class_reps(alt5)) == [1, 12, 12, 15, 20]

    def test_first_rep_is_identity(self, alt5):
        rep, size = next(conjugacy_class_reps(alt5))
        assert rep.is_identity() and size == 1


class TestChiefSeries:
    def test_s4(self, sym4):
        series = chief_series(sym4)
        assert [step.factor_order for step in series] == [2, 3, 4]
        assert all(step.is_abelian for step in series)
        assert non_abelian_factor_count(series) == 0
        assert series[-1].lower.order == 1
        assert series[0].upper.order == 24

    def test_s5(self, sym5):
        series = chief_series(sym5)
        assert [step.factor_order for step in series] == [2, 60]
        assert non_abelian_factor_count(series) == 1

    def test_a5_x_c3(self, alt5):
        group = direct_product([alt5, cyclic_group(3)])
        series = chief_series(group)
        assert sorted(step.factor_order for step in series) == [3, 60]
        assert non_abelian_factor_count(series) == 1

    def test_factor_orders_are_characteristically_simple(self, sym4):
        for step in chief_series(sym4):
            assert is_characteristically_simple_order(step.factor_order)
        assert not is_characteristically_simple_order(6)
        assert is_characteristically_simple_order(3600)

    def test_centralized_by(self, sym4):
        bottom = chief_series(sym4)[-1]
        assert bottom.centralized_by(from_cycles(4, [(0, 1), (2, 3)]))
        assert not bottom.centralized_by(from_cycles(4, [(0, 1, 2)]))
        assert bottom.is_p_coprime(3)
        assert not bottom.is_p_coprime(2)

    def test_minimal_normal_subgroup(self, sym4, alt5):
        assert minimal_normal_subgroup(sym4).same_group(klein_four())
        assert minimal_normal_subgroup(alt5).order == 60

    def test_cap(self, sym5):
        with pytest.raises(CapExceededError):
            chief_series(sym5, enum_cap=100)

    @pytest.mark.parametrize(
        "generators",
        [
            [[(0, 1)], [(0, 1, 2, 3, 4)]],
            [[(0, 1, 2, 3, 4)], [(0, 1)]],
            [[(1, 2)], [(0, 1, 2, 3, 4)], [(0, 1, 2)]],
            [[(0, 1, 2, 3)], [(3, 4)]],
        ],
    )
    def test_s5_factors_do_not_depend_on_generators(self, generators):
        group = build_chain([from_cycles(5, cycles) for cycles in generators])
        assert group.order == 120
        series = chief_series(group)
        assert sorted(step.factor_order for step in series) == [2, 60]
        assert non_abelian_factor_count(series) == 1

    @pytest.mark.parametrize("rearrange", [lambda gens: gens[::-1], lambda gens: gens + [gens[0] * gens[-1]]])
    def test_a5_x_c3_factors_do_not_depend_on_generators(self, alt5, rearrange):
        original = direct_product([alt5, cyclic_group(3)])
        group = build_chain(rearrange(list(original.generators)))
        assert group.same_group(original)
        series = chief_series(group)
        assert sorted(step.factor_order for step in series) == [3, 60]
        assert non_abelian_factor_count(series) == 1


class TestOp:
    @pytest.mark.parametrize(
        "build,p,order",
        [
            (lambda: symmetric_group(4), 2, 4),
            (lambda: symmetric_group(4), 3, 1),
            (lambda: symmetric_group(3), 3, 3),
            (lambda: alternating_group(5), 2, 1),
            (lambda: metacyclic_affine(7, 1, 3, 1), 7, 7),
            (lambda: cyclic_group(9), 3, 9),
        ],
    )
    def test_orders(self, build, p, order):
        assert o_p(build(), p).order == order

    def test_coprime_prime_gives_trivial(self, sym4):
        assert o_p(sym4, 5).order == 1

    def test_m10_has_trivial_o2(self):
        group, _ = m10()
        assert o_p(group, 2).order == 1

    def test_o_p_is_normal(self):
        group = classical_group("psl2", 7)
        assert is_normal(group, o_p(group, 7))

    @pytest.mark.parametrize(
        "build,primes",
        [
            (lambda: symmetric_group(4), [2, 3]),
            (lambda: direct_product([alternating_group(4), cyclic_group(3)]), [2, 3]),
            (lambda: metacyclic_affine(7, 1, 3, 1), [3, 7]),
            (lambda: metacyclic_affine(3, 2, 2, 1), [2, 3]),
        ],
    )
    def test_contains_every_normal_p_subgroup(self, build, primes):
        group = build()
        checked = 0
        for p in primes:
            op = o_p(group, p)
            for x, _ in conjugacy_class_reps(group):
                if x.is_identity() or not is_p_element(x, p):
                    continue
                closure = normal_closure(group, [x])
                if set(factorint(closure.order)) == {p}:
                    assert closure.is_subgroup_of(op)
                    checked += 1
        assert checked
