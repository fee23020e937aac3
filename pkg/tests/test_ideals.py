"""
Testes para o cálculo de ideais e a enumeração do reticulado
"""
import pytest

from src.monoid_ideals.algebra.ideals import (
    brute_force_ideals,
    colon,
    colon_ideal,
    enumerate_ideals,
    generate,
    intersect,
    intersect_all,
    is_distributive,
    is_lattice_closed,
    make_ideal,
    principal,
    product,
    radical,
    union,
    x_closure_bits,
)
from src.monoid_ideals.algebra.monoid_core import bits_of, chain, direct_product, zn_mul
from src.monoid_ideals.errors import (
    EmptyDivisorSet,
    EmptyGeneratorSet,
    IndexOutOfRange,
    LatticeTooLarge,
    MonoidMismatch,
    NotAnIdeal,
)


def members(ideals):
    return [list(ideal.members) for ideal in ideals]


@pytest.mark.unit
@pytest.mark.ideals
class TestIdealConstruction:
    """Testes para construção e geração de ideais"""

    def test_make_ideal(self, zn6):
        """Testa ideal válido"""
        ideal = make_ideal(zn6, [4, 0, 2])

        assert ideal.members == (0, 2, 4)
        assert 2 in ideal
        assert 3 not in ideal
        assert len(ideal) == 3

    def test_make_ideal_not_absorbing(self, zn6):
        """Testa conjunto que não absorve a multiplicação"""
        with pytest.raises(NotAnIdeal) as exc_info:
            make_ideal(zn6, [0, 2])

        assert exc_info.value.witness == (2, 2)

    def test_make_ideal_empty(self, zn6):
        """Testa conjunto vazio"""
        with pytest.raises(EmptyGeneratorSet):
            make_ideal(zn6, [])

    def test_make_ideal_out_of_range(self, zn6):
        """Testa índice fora do monoide"""
        with pytest.raises(IndexOutOfRange):
            make_ideal(zn6, [0, 7])

    def test_generate(self, zn6):
        """Testa <S> = S ∪ SM"""
        assert generate(zn6, [2]).members == (0, 2, 4)
        assert generate(zn6, [2, 3]).members == (0, 2, 3, 4)
        assert generate(zn6, [5]).is_full

    def test_generate_empty(self, zn6):
        """Testa geração sem geradores"""
        with pytest.raises(EmptyGeneratorSet):
            generate(zn6, [])

    def test_principal_equals_generate(self, zn6):
        """Testa ideal principal"""
        for a in zn6.elements:
            assert principal(zn6, a) == generate(zn6, [a])

    def test_to_dict(self, zn6):
        """Testa serialização de um ideal"""
        assert make_ideal(zn6, [0, 3]).to_dict() == {"members": [0, 3]}


@pytest.mark.unit
@pytest.mark.ideals
class TestIdealOperations:
    """Testes para produto, interseção, união, colon e radical"""

    def test_product(self, zn6):
        """Testa IJ"""
        evens = make_ideal(zn6, [0, 2, 4])
        threes = make_ideal(zn6, [0, 3])

        assert product(evens, threes).members == (0,)
        assert product(evens, evens).members == (0, 2, 4)

    def test_intersect_and_union(self, zn6):
        """Testa interseção e união"""
        evens = make_ideal(zn6, [0, 2, 4])
        threes = make_ideal(zn6, [0, 3])

        assert intersect(evens, threes).members == (0,)
        assert union(evens, threes).members == (0, 2, 3, 4)

    def test_intersect_all_empty_family(self, zn6):
        """Testa que a família vazia dá o monoide inteiro"""
        assert intersect_all(zn6, []).is_full

    def test_mismatched_monoids(self, zn6):
        """Testa operandos em monoides diferentes"""
        other = zn_mul(4)

        with pytest.raises(MonoidMismatch):
            intersect(make_ideal(zn6, [0]), make_ideal(other, [0]))

    def test_colon(self, zn6):
        """Testa (I : S)"""
        zero = make_ideal(zn6, [0])
        evens = make_ideal(zn6, [0, 2, 4])

        assert colon(zero, [2]).members == (0, 3)
        assert colon(evens, [3]).members == (0, 2, 4)
        assert colon(make_ideal(zn6, [0, 3]), [3]).is_full

    def test_colon_by_identity(self, zn6_lattice):
        """Testa (I : {1}) = I"""
        for ideal in zn6_lattice:
            assert colon(ideal, [1]) == ideal

    def test_colon_ideal(self, zn6):
        """Testa (I : J) com J ideal"""
        zero = make_ideal(zn6, [0])
        threes = make_ideal(zn6, [0, 3])

        assert colon_ideal(zero, threes).members == (0, 2, 4)

    def test_colon_empty_divisors(self, zn6):
        """Testa colon sem divisores"""
        with pytest.raises(EmptyDivisorSet):
            colon(make_ideal(zn6, [0]), [])

    def test_radical(self):
        """Testa √I em monoides com nilpotentes"""
        z4 = zn_mul(4)
        z8 = zn_mul(8)

        assert radical(make_ideal(z4, [0])).members == (0, 2)
        assert radical(make_ideal(z8, [0])).members == (0, 2, 4, 6)

    def test_radical_chain(self, chain3):
        """Testa radical do zero numa cadeia"""
        assert radical(make_ideal(chain3, [3])).members == (1, 2, 3)

    def test_radical_is_idempotent(self, zn6_lattice):
        """Testa √√I = √I"""
        for ideal in zn6_lattice:
            root = radical(ideal)
            assert radical(root) == root
            assert ideal.issubset(root)

    def test_x_closure(self, zn6):
        """Testa A_x = MA ∪ A"""
        assert x_closure_bits(zn6, bits_of([2])) == bits_of([0, 2, 4])
        assert x_closure_bits(zn6, bits_of([3, 4])) == bits_of([0, 2, 3, 4])


@pytest.mark.unit
@pytest.mark.ideals
class TestIdealLattice:
    """Testes para a enumeração do reticulado"""

    def test_zn6_lattice(self, zn6_lattice):
        """Testa os ideais de Z6 em ordem canônica"""
        assert members(zn6_lattice) == [
            [0], [0, 3], [0, 2, 4], [0, 2, 3, 4], [0, 1, 2, 3, 4, 5],
        ]
        assert zn6_lattice.bottom.members == (0,)
        assert zn6_lattice.top.is_full

    def test_chain_lattice(self, chain3_lattice):
        """Testa que a cadeia tem reticulado linear"""
        assert members(chain3_lattice) == [[3], [2, 3], [1, 2, 3], [0, 1, 2, 3]]

    def test_product_lattice_size(self, zn4_x_c2):
        """Testa que Z4 x C2 tem 19 ideais (grade 3x3)"""
        assert len(enumerate_ideals(zn4_x_c2)) == 19

    def test_small_family_counts(self):
        """Testa contagens conhecidas: Z4, cadeias e C1 x C1"""
        assert len(enumerate_ideals(zn_mul(4))) == 3
        for k in (1, 2, 4):
            assert len(enumerate_ideals(chain(k))) == k + 1
        assert len(enumerate_ideals(direct_product(chain(1), chain(1)))) == 5

    def test_matches_brute_force(self, zn4_x_c2):
        """Testa enumeração contra o oráculo de força bruta"""
        for m in (zn_mul(6), zn_mul(8), zn_mul(12), zn4_x_c2):
            found = [ideal.bits for ideal in enumerate_ideals(m)]
            expected = [ideal.bits for ideal in brute_force_ideals(m)]
            assert found == expected

    def test_lattice_too_large(self, zn6):
        """Testa limite de ideais"""
        with pytest.raises(LatticeTooLarge):
            enumerate_ideals(zn6, max_ideals=3)

    def test_lookup(self, zn6, zn6_lattice):
        """Testa consulta por vetor de bits e pertinência"""
        threes = make_ideal(zn6, [0, 3])

        assert threes in zn6_lattice
        assert bits_of([0, 2]) not in zn6_lattice
        assert zn6_lattice.get(threes.bits) == threes
        assert zn6_lattice.get(bits_of([0, 2])) is None
        assert zn6_lattice.position(threes) == 1

    def test_supersets(self, zn6, zn6_lattice):
        """Testa os ideais que contêm um ideal"""
        threes = make_ideal(zn6, [0, 3])

        assert members(zn6_lattice.supersets(threes)) == [
            [0, 3], [0, 2, 3, 4], [0, 1, 2, 3, 4, 5],
        ]
        assert members(zn6_lattice.supersets(threes, strict=True)) == [
            [0, 2, 3, 4], [0, 1, 2, 3, 4, 5],
        ]

    def test_proper_ideals(self, zn6_lattice):
        """Testa que M fica de fora dos próprios"""
        assert len(zn6_lattice.proper_ideals) == 4

    def test_distributive(self, zn6_lattice, zn4_x_c2):
        """Testa distributividade e fechamento"""
        assert is_distributive(zn6_lattice) == (True, None)
        assert is_lattice_closed(zn6_lattice) == (True, None)
        assert is_distributive(enumerate_ideals(zn4_x_c2))[0] is True
