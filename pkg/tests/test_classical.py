import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.classical import (
    classical_group,
    diagonal_outer,
    expected_order,
    field_make,
    frobenius_permutation,
    m10,
    make_coset,
    mobius_permutation,
    outer_coset,
    points,
    special_linear_group,
    split_prime_power,
)
from src.errors import CapExceededError, InvalidParameterError, NotInGroupError, NotPrimeError
from src.permcore import identity, is_p_element, order_of

FIELDS = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2)]


def _field_triples(spec):
    elements = st.integers(0, spec.size - 1)
    return st.tuples(elements, elements, elements)


class TestField:
    @pytest.mark.parametrize("r,k", FIELDS)
    def test_primitive_element_generates(self, r, k):
        field = field_make(r, k)
        if field.size > 2:
            assert field.multiplicative_order(field.primitive_element) == field.size - 1

    @pytest.mark.parametrize("r,k", [(3, 2), (2, 3), (5, 2)])
    def test_ring_laws(self, r, k):
        field = field_make(r, k)

        @given(_field_triples(field))
        def check(triple):
            a, b, c = triple
            assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
            assert field.add(a, field.neg(a)) == 0
            assert field.sub(field.add(a, b), b) == a
            if a:
                assert field.mul(a, field.inv(a)) == 1

        check()

    @pytest.mark.parametrize("r,k", [(3, 2), (2, 3), (3, 3)])
    def test_frobenius_is_automorphism_of_order_k(self, r, k):
        field = field_make(r, k)
        for a in field.elements():
            for b in field.elements():
                assert field.frobenius(field.mul(a, b)) == field.mul(field.frobenius(a), field.frobenius(b))
                assert field.frobenius(field.add(a, b)) == field.add(field.frobenius(a), field.frobenius(b))
        assert order_of(frobenius_permutation(field)) == k

    def test_prime_field_frobenius_is_trivial(self):
        assert frobenius_permutation(field_make(7, 1)) == identity(8)

    def test_field_make_is_cached(self):
        assert field_make(3, 2) is field_make(3, 2)

    def test_field_errors(self):
        with pytest.raises(NotPrimeError):
            field_make(4, 1)
        with pytest.raises(InvalidParameterError):
            field_make(3, 0)
        with pytest.raises(CapExceededError):
            field_make(2, 30)

    def test_split_prime_power(self):
        assert split_prime_power(27) == (3, 3)
        assert split_prime_power(7) == (7, 1)
        for bad in (1, 12, 100):
            with pytest.raises(InvalidParameterError):
                split_prime_power(bad)


class TestProjectiveLine:
    def test_points(self):
        field = field_make(5, 1)
        line = points(field)
        assert len(line) == 6
        assert line[-1] == (1, 0)

    def test_translation(self):
        field = field_make(5, 1)
        # x ↦ x + 1, infinito fixo
        assert list(mobius_permutation(field, 1, 0, 1, 1)) == [1, 2, 3, 4, 0, 5]

    def test_inversion_swaps_zero_and_infinity(self):
        field = field_make(7, 1)
        p = mobius_permutation(field, 0, 1, 1, 0)
        assert p[0] == 7 and p[7] == 0
        assert order_of(p) == 2

    def test_singular_matrix(self):
        with pytest.raises(InvalidParameterError):
            mobius_permutation(field_make(5, 1), 1, 2, 2, 4)


class TestClassicalGroups:
    @pytest.mark.parametrize(
        "kind,q,order",
        [
            ("psl2", 4, 60),
            ("psl2", 5, 60),
            ("psl2", 7, 168),
            ("psl2", 8, 504),
            ("psl2", 9, 360),
            ("pgl2", 5, 120),
            ("pgl2", 9, 720),
            ("psigmal2", 8, 1512),
            ("psigmal2", 9, 720),
            ("pgammal2", 9, 1440),
        ],
    )
    def test_orders(self, kind, q, order):
        group = classical_group(kind, q)
        assert group.order == order == expected_order(kind, q)
        assert group.degree == q + 1
        assert group.label == f"{kind}:{q}"

    def test_psl_inside_pgl(self):
        assert classical_group("psl2", 7).is_subgroup_of(classical_group("pgl2", 7))
        assert classical_group("psl2", 9).is_subgroup_of(classical_group("pgammal2", 9))

    @pytest.mark.parametrize(
        "kind,q",
        [("pgl2", 8), ("pgammal2", 4), ("psl2", 3), ("psl2", 6), ("psl2", 12), ("gl2", 5)],
    )
    def test_invalid_parameters(self, kind, q):
        with pytest.raises(InvalidParameterError):
            classical_group(kind, q)

    @pytest.mark.parametrize("q,order", [(2, 6), (3, 24), (5, 120)])
    def test_special_linear(self, q, order):
        group = special_linear_group(q)
        assert group.order == order
        assert group.degree == q * q - 1


class TestCosets:
    def test_diag_coset(self):
        coset = outer_coset("diag", 5)
        assert coset.size == 60
        assert coset.ambient.order == 120
        assert not coset.socle.contains(coset.rep)
        elements = set(coset.elements())
        assert len(elements) == 60
        assert not elements & set(coset.socle.elements())

    def test_frob_coset(self):
        coset = outer_coset("frob", 9)
        assert coset.label == "frob:9"
        assert coset.ambient.label == "psigmal2:9"
        assert order_of(coset.rep) == 2

    def test_diag_frob_rep_has_order_4k(self):
        coset = outer_coset("diag_frob", 9)
        assert order_of(coset.rep) == 8
        assert coset.ambient.order == 720

    @pytest.mark.parametrize(
        "kind,q", [("frob", 5), ("diag_frob", 7), ("diag", 8), ("diag", 3), ("swap", 9)]
    )
    def test_invalid_cosets(self, kind, q):
        with pytest.raises(InvalidParameterError):
            outer_coset(kind, q)

    def test_make_coset_requires_membership(self):
        socle = classical_group("psl2", 5)
        with pytest.raises(NotInGroupError):
            make_coset(socle, socle, diagonal_outer(field_make(5, 1)))


class TestM10:
    def test_order_and_socle(self):
        group, socle = m10()
        assert group.order == 720
        assert socle.order == 360
        assert socle.is_subgroup_of(group)
        assert group.label == "m10"

    def test_outer_elements_are_two_elements(self):
        coset = outer_coset("diag_frob", 9)
        orders = {order_of(x) for x in coset.elements()}
        assert orders == {4, 8}
        assert all(is_p_element(x, 2) for x in coset.elements())
