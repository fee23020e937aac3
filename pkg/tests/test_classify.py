"""
Testes para a classificação de ideais
"""
import pytest

from src.monoid_ideals.algebra.classify import (
    all_ideals_comparable,
    classify_ideal,
    elementwise_irreducible,
    every_proper_ideal_irreducible,
    first_reducible_primary,
    is_irreducible,
    is_maximal,
    is_primary,
    is_prime,
    is_prime_by_ideals,
    is_proper,
    is_semiprime,
    is_semiprime_by_squares,
    is_strongly_irreducible,
    maximal_ideal,
    minimal_irreducible_over,
    minimal_irreducibles_over,
)
from src.monoid_ideals.algebra.ideals import enumerate_ideals, generate, make_ideal
from src.monoid_ideals.algebra.monoid_core import zn_mul
from src.monoid_ideals.errors import NoProperIdeal, NotProper


@pytest.mark.unit
@pytest.mark.classify
class TestPrimeAndPrimary:
    """Testes para primo, semiprimo e primário"""

    def test_zn6_zero_ideal(self, zn6):
        """Testa {0} em Z6: semiprimo, nem primo nem primário"""
        zero = make_ideal(zn6, [0])

        assert is_proper(zero)
        assert not is_prime(zero)
        assert is_semiprime(zero)
        assert not is_primary(zero)

    def test_zn6_primes(self, zn6):
        """Testa os primos de Z6"""
        for members in ([0, 3], [0, 2, 4], [0, 2, 3, 4]):
            ideal = make_ideal(zn6, members)
            assert is_prime(ideal)
            assert is_primary(ideal)

    def test_full_monoid_is_not_prime(self, zn6_lattice):
        """Testa que M não é primo nem primário"""
        top = zn6_lattice.top

        assert not is_proper(top)
        assert not is_prime(top)
        assert not is_primary(top)

    def test_chain_zero_is_primary_not_prime(self, chain3):
        """Testa {0} na cadeia: primário mas não primo nem semiprimo"""
        zero = make_ideal(chain3, [3])

        assert is_primary(zero)
        assert not is_prime(zero)
        assert not is_semiprime(zero)

    def test_criteria_by_ideals(self, zn6_lattice, chain3_lattice):
        """Testa os critérios por ideais contra os critérios por elementos"""
        for lattice in (zn6_lattice, chain3_lattice):
            for ideal in lattice:
                assert is_prime_by_ideals(ideal, lattice) == is_prime(ideal)
                assert is_semiprime_by_squares(ideal, lattice) == is_semiprime(ideal)


@pytest.mark.unit
@pytest.mark.classify
class TestMaximal:
    """Testes para o ideal maximal"""

    def test_maximal_is_non_units(self, zn6):
        """Testa que o maximal é o conjunto dos não invertíveis"""
        mx = maximal_ideal(zn6)

        assert mx.members == (0, 2, 3, 4)
        assert is_maximal(mx)
        assert not is_maximal(make_ideal(zn6, [0, 3]))

    def test_trivial_monoid(self):
        """Testa que o monoide trivial não tem ideal próprio"""
        with pytest.raises(NoProperIdeal):
            maximal_ideal(zn_mul(1))


@pytest.mark.unit
@pytest.mark.classify
class TestIrreducible:
    """Testes para irredutível e fortemente irredutível"""

    def test_zero_ideal_is_reducible(self, zn6, zn6_lattice):
        """Testa {0} = {0,3} ∩ {0,2,4}"""
        zero = make_ideal(zn6, [0])

        assert not is_irreducible(zero, zn6_lattice)
        assert not is_strongly_irreducible(zero, zn6_lattice)
        assert not elementwise_irreducible(zero)

    def test_full_monoid_is_irreducible(self, zn6_lattice):
        """Testa que M é irredutível vacuamente"""
        assert is_irreducible(zn6_lattice.top, zn6_lattice)
        assert is_strongly_irreducible(zn6_lattice.top, zn6_lattice)

    def test_prime_generated_ideals(self, zn6, zn6_lattice):
        """Testa <2>, <3> e <{2, 3}> em Z6 e <2> em Z12"""
        for generators, members in (([2], (0, 2, 4)), ([3], (0, 3)), ([2, 3], (0, 2, 3, 4))):
            ideal = generate(zn6, generators)

            assert ideal.members == members
            assert is_irreducible(ideal, zn6_lattice)

        z12 = zn_mul(12)
        evens = generate(z12, [2])

        assert evens.members == (0, 2, 4, 6, 8, 10)
        assert is_irreducible(evens, enumerate_ideals(z12))

    def test_three_notions_agree(self, zn6_lattice, zn4_x_c2):
        """Testa irredutível, fortemente irredutível e por elementos"""
        for lattice in (zn6_lattice, enumerate_ideals(zn4_x_c2)):
            for ideal in lattice:
                flags = {
                    is_irreducible(ideal, lattice),
                    is_strongly_irreducible(ideal, lattice),
                    elementwise_irreducible(ideal),
                }
                assert len(flags) == 1

    def test_minimal_irreducibles_over(self, zn6, zn6_lattice):
        """Testa os irredutíveis minimais sobre {0}"""
        zero = make_ideal(zn6, [0])
        witnesses = minimal_irreducibles_over(zero, zn6_lattice)

        assert [list(w.members) for w in witnesses] == [[0, 3], [0, 2, 4]]
        assert minimal_irreducible_over(zero, zn6_lattice).members == (0, 3)

    def test_minimal_irreducible_over_irreducible(self, zn6, zn6_lattice):
        """Testa que um irredutível é minimal sobre si mesmo"""
        evens = make_ideal(zn6, [0, 2, 4])

        assert minimal_irreducible_over(evens, zn6_lattice) == evens

    def test_minimal_irreducible_over_full(self, zn6_lattice):
        """Testa que M não tem irredutível minimal próprio"""
        with pytest.raises(NotProper):
            minimal_irreducibles_over(zn6_lattice.top, zn6_lattice)


@pytest.mark.unit
@pytest.mark.classify
class TestLatticeShape:
    """Testes para propriedades do reticulado inteiro"""

    def test_chain_is_comparable(self, chain3_lattice):
        """Testa cadeia: tudo comparável e todo próprio irredutível"""
        assert all_ideals_comparable(chain3_lattice)
        assert every_proper_ideal_irreducible(chain3_lattice)

    def test_zn6_is_not_comparable(self, zn6_lattice):
        """Testa Z6: ideais incomparáveis e {0} redutível"""
        assert not all_ideals_comparable(zn6_lattice)
        assert not every_proper_ideal_irreducible(zn6_lattice)

    def test_no_reducible_primary(self, zn6_lattice, chain3_lattice):
        """Testa que primários de Z6 e da cadeia são irredutíveis"""
        assert first_reducible_primary(zn6_lattice) is None
        assert first_reducible_primary(chain3_lattice) is None


@pytest.mark.unit
@pytest.mark.classify
class TestClassifyIdeal:
    """Testes para o registro de classificação"""

    def test_zero_ideal_record(self, zn6, zn6_lattice):
        """Testa registro de {0} em Z6"""
        record = classify_ideal(make_ideal(zn6, [0]), zn6_lattice)

        assert record.to_dict() == {
            "members": [0],
            "proper": True,
            "prime": False,
            "semiprime": True,
            "primary": False,
            "maximal": False,
            "irreducible": False,
            "strongly_irreducible": False,
            "radical": [0],
            "minimal_irreducible_over": [0, 3],
        }

    def test_list_all_minimal(self, zn6, zn6_lattice):
        """Testa a lista completa de irredutíveis minimais"""
        record = classify_ideal(make_ideal(zn6, [0]), zn6_lattice, list_all_minimal=True)

        assert record.to_dict()["minimal_irreducibles_over"] == [[0, 3], [0, 2, 4]]

    def test_full_monoid_record(self, zn6_lattice):
        """Testa registro de M"""
        record = classify_ideal(zn6_lattice.top, zn6_lattice, list_all_minimal=True)

        assert record.proper is False
        assert record.minimal_irreducible_over is None
        assert record.minimal_irreducibles_over == []
