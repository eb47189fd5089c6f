from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import factorint, primerange

from src.census import count_p_elements, p_census
from src.classical import m10
from src.constructions import (
    EmbeddingMap,
    ProductStructure,
    SubdirectStructure,
    alternating_group,
    cyclic_group,
    direct_power,
    direct_product,
    gt_tower,
    metacyclic_affine,
    metacyclic_kernel,
    metacyclic_tower,
    subdirect_X_t,
    symmetric_group,
    wreath_Y_t,
    wreath_base,
    xu_tower,
    yt_tower,
)
from src.errors import CapExceededError, InvalidParameterError, NotNormalError
from src.permcore import build_chain, from_cycles, is_p_element
from src.quotients import is_normal
from tests.strategies import permutations_of


def outer_generator():
    x_group, socle = m10()
    return next(g for g in x_group.generators if not socle.contains(g))


# varredura exaustiva: q^m <= 10^4, limitada a |G| <= 5000 para caber na enumeração
MAX_SWEEP_ORDER = 5000


def admissible_metacyclic(max_order):
    for q in primerange(3, 10**4 + 1):
        m = 1
        while q**m <= 10**4:
            for p, multiplicity in factorint(q - 1).items():
                for n in range(1, multiplicity + 1):
                    if p**n * q**m <= max_order:
                        yield q, m, p, n
            m += 1


def assert_omega_is_kernel_complement(q, m, p, n):
    group = metacyclic_affine(q, m, p, n)
    kernel = metacyclic_kernel(q, m)
    for x in group.elements():
        assert is_p_element(x, p) == (x.is_identity() or not kernel.contains(x))


class TestNamedFamilies:
    @pytest.mark.parametrize(
        "build,n,order",
        [
            (symmetric_group, 1, 1),
            (symmetric_group, 2, 2),
            (symmetric_group, 5, 120),
            (alternating_group, 2, 1),
            (alternating_group, 5, 60),
            (alternating_group, 6, 360),
            (cyclic_group, 1, 1),
            (cyclic_group, 9, 9),
        ],
    )
    def test_orders(self, build, n, order):
        group = build(n)
        assert group.order == order
        assert group.degree == n

    @pytest.mark.parametrize("build", [symmetric_group, alternating_group, cyclic_group])
    def test_non_positive_degree(self, build):
        with pytest.raises(InvalidParameterError):
            build(0)

    def test_labels(self):
        assert symmetric_group(4).label == "sym:4"
        assert alternating_group(4).label == "alt:4"
        assert cyclic_group(3).label == "cyc:3"


class TestEmbeddingMap:
    @given(st.integers(1, 4).flatmap(lambda d: st.lists(permutations_of(d), min_size=1, max_size=4)))
    def test_components_of_tuple_element(self, components):
        embed = EmbeddingMap(len(components[0]), len(components))
        element = embed.tuple_element(components)
        assert embed.components(element) == components
        assert embed.preserves_blocks(element)

    def test_block_permutation_moves_whole_blocks(self):
        embed = EmbeddingMap(3, 2)
        swap = embed.block_permutation([1, 0])
        assert list(swap) == [3, 4, 5, 0, 1, 2]
        assert embed.preserves_blocks(swap)
        with pytest.raises(InvalidParameterError):
            embed.components(swap)

    def test_plant_checks_block_size(self):
        with pytest.raises(InvalidParameterError):
            EmbeddingMap(3, 2).plant(from_cycles(4, [(0, 1)]), 0)


class TestProducts:
    def test_direct_product(self, sym3):
        group = direct_product([sym3, cyclic_group(2)])
        assert group.order == 12
        assert group.degree == 5
        assert isinstance(group.structure, ProductStructure)
        assert group.label == "prod:(sym:3),(cyc:2)"

    def test_direct_power(self, alt5):
        group = direct_power(alt5, 2)
        assert group.order == 3600
        assert group.label == "dp:(alt:5),2"

    def test_direct_power_of_a6(self):
        assert direct_power(alternating_group(6), 2).order == 129600

    def test_invalid_products(self, sym3):
        with pytest.raises(InvalidParameterError):
            direct_product([])
        with pytest.raises(InvalidParameterError):
            direct_power(sym3, 0)


class TestSubdirect:
    def test_x1_is_m10(self):
        x_group, socle = m10()
        group = subdirect_X_t(x_group, socle, 1)
        assert group.order == 720
        assert group.label == "xt:1"

    def test_x2_order(self):
        x_group, socle = m10()
        group = subdirect_X_t(x_group, socle, 2)
        assert group.order == 2 * 360**2 == 259200
        assert group.degree == 20
        assert isinstance(group.structure, SubdirectStructure)
        assert group.structure.t == 2

    def test_small_subdirect(self, sym4, alt4):
        group = subdirect_X_t(sym4, alt4, 3)
        assert group.order == 2 * 12**3
        assert group.label == "xt:(sym:4),3"

    def test_requires_index_two(self, sym4):
        with pytest.raises(InvalidParameterError):
            subdirect_X_t(sym4, cyclic_group(4), 2)
        with pytest.raises(InvalidParameterError):
            subdirect_X_t(sym4, alternating_group(4), 0)


class TestWreath:
    def test_y0_has_order_of_x(self):
        _, socle = m10()
        a = outer_generator()
        assert wreath_Y_t(socle, a, 0).order == 720

    def test_small_wreath(self, alt4):
        a = from_cycles(4, [(0, 1)])
        assert wreath_Y_t(alt4, a, 1).order == 2 * 2 * 12**2
        assert wreath_Y_t(alt4, a, 2).order == 2 * 4 * 12**4

    def test_rejects_inner_element(self, alt4):
        with pytest.raises(InvalidParameterError):
            wreath_Y_t(alt4, from_cycles(4, [(0, 1, 2)]), 1)

    def test_rejects_non_normalizing_element(self):
        sub = build_chain([from_cycles(4, [(0, 1, 2)])])
        with pytest.raises(NotNormalError):
            wreath_Y_t(sub, from_cycles(4, [(2, 3)]), 1)

    def test_non_base_elements_are_all_two_elements(self, alt4):
        y1 = wreath_Y_t(alt4, from_cycles(4, [(0, 1)]), 1)
        base = wreath_base(alt4, 1)
        assert (y1.order, base.order) == (576, 144)
        outside = [x for x in y1.elements() if not base.contains(x)]
        assert count_p_elements(outside, 2) == len(outside) == y1.order - base.order == 432

    @pytest.mark.slow
    def test_non_base_census_of_y1(self):
        _, socle = m10()
        y1 = wreath_Y_t(socle, outer_generator(), 1)
        base = wreath_base(socle, 1)
        assert y1.order == 518400
        outside = count_p_elements((x for x in y1.elements() if not base.contains(x)), 2)
        assert outside == y1.order - base.order


class TestMetacyclic:
    @pytest.mark.parametrize("q,m,p,n,order", [(7, 1, 3, 1, 21), (3, 2, 2, 1, 18), (5, 1, 2, 2, 20), (19, 1, 3, 2, 171)])
    def test_orders(self, q, m, p, n, order):
        group = metacyclic_affine(q, m, p, n)
        assert group.order == order
        assert group.degree == q**m

    def test_kernel_is_normal(self):
        group = metacyclic_affine(3, 2, 2, 1)
        kernel = metacyclic_kernel(3, 2)
        assert kernel.order == 9
        assert is_normal(group, kernel)

    @pytest.mark.parametrize("q,m,p,n", [(5, 1, 2, 3), (4, 1, 3, 1), (7, 1, 4, 1), (7, 0, 3, 1)])
    def test_invalid(self, q, m, p, n):
        with pytest.raises(InvalidParameterError):
            metacyclic_affine(q, m, p, n)

    def test_degree_cap(self):
        with pytest.raises(CapExceededError):
            metacyclic_affine(10007, 1, 2, 1)

    @pytest.mark.parametrize("q,m,p,n", [(7, 1, 3, 1), (3, 2, 2, 1), (5, 1, 2, 2), (19, 1, 3, 2), (5, 2, 2, 1)])
    def test_p_elements_are_the_complement_of_the_kernel(self, q, m, p, n):
        assert_omega_is_kernel_complement(q, m, p, n)

    @pytest.mark.slow
    def test_p_elements_sweep(self):
        instances = list(admissible_metacyclic(MAX_SWEEP_ORDER))
        assert (3, 1, 2, 1) in instances and (3, 7, 2, 1) in instances
        for params in instances:
            assert_omega_is_kernel_complement(*params)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_census_approaches_one_half(self, m):
        probability = p_census(metacyclic_affine(3, m, 2, 1), 2).probability
        assert probability == Fraction(3**m + 1, 2 * 3**m)
        assert abs(probability - Fraction(1, 2)) == Fraction(1, 2 * 3**m)


class TestTowerSpecs:
    def test_gt_closed_form(self):
        spec = gt_tower()
        assert spec.closed_form(1) == Fraction(496, 720)
        assert spec.closed_form(2) == Fraction(148096, 259200)
        assert spec.limit == Fraction(1, 2)

    def test_yt_lower_bound(self):
        spec = yt_tower()
        assert spec.closed_form(0) == Fraction(1, 2)
        assert spec.closed_form(1) == Fraction(3, 4)
        assert spec.relation == ">="

    def test_xu_partial_products(self):
        spec = xu_tower(1)
        assert spec.closed_form(1) == Fraction(3, 4)
        assert spec.closed_form(2) == Fraction(21, 32)
        assert spec.parameters["floor"] == "1/2"
        with pytest.raises(InvalidParameterError):
            xu_tower(0)

    def test_metacyclic_closed_form(self):
        spec = metacyclic_tower(3, 2, 1)
        for m in range(1, 7):
            assert spec.closed_form(m) == Fraction(3**m + 1, 2 * 3**m)
            assert abs(spec.closed_form(m) - spec.limit) == Fraction(1, 2 * 3**m)
        assert spec.limit == Fraction(1, 2)
        assert spec.exact_reach == 8
