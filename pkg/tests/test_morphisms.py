"""
Testes para homomorfismos, contração, extensão e núcleos
"""
import pytest

from src.monoid_ideals.algebra.ideals import enumerate_ideals, make_ideal
from src.monoid_ideals.algebra.monoid_core import identity_hom, make_homomorphism, zn_mul
from src.monoid_ideals.algebra.morphisms import (
    check_inverse_image_irreducible,
    contract,
    enumerate_homomorphisms,
    extend,
    kernel,
    kernel_condition_rees,
    rees_congruence_contains,
)
from src.monoid_ideals.errors import (
    EmptyContraction,
    NotSurjective,
    SourceMismatch,
    TargetMismatch,
)


@pytest.fixture
def mod3(zn6, zn3):
    """Redução Z6 -> Z3"""
    return make_homomorphism(zn6, zn3, [a % 3 for a in range(6)])


@pytest.fixture
def constant_one(zn6, zn3):
    """Homomorfismo constante em 1 (não pontuado, não sobrejetor)"""
    return make_homomorphism(zn6, zn3, [1] * 6)


@pytest.mark.unit
@pytest.mark.morphisms
class TestContractionExtension:
    """Testes para J^c e I^e"""

    def test_contract(self, mod3, zn3):
        """Testa φ⁻¹({0}) = {0, 3}"""
        assert contract(mod3, make_ideal(zn3, [0])).members == (0, 3)

    def test_contract_full(self, mod3, zn3):
        """Testa que M contrai para M"""
        assert contract(mod3, make_ideal(zn3, [0, 1, 2])).is_full

    def test_contract_empty(self, constant_one, zn3):
        """Testa pré-imagem vazia"""
        with pytest.raises(EmptyContraction):
            contract(constant_one, make_ideal(zn3, [0]))

    def test_contract_wrong_monoid(self, mod3, zn6):
        """Testa ideal fora do alvo"""
        with pytest.raises(TargetMismatch):
            contract(mod3, make_ideal(zn6, [0]))

    def test_extend(self, mod3, zn6):
        """Testa extensões ao longo da redução"""
        assert extend(mod3, make_ideal(zn6, [0, 3])).members == (0,)
        assert extend(mod3, make_ideal(zn6, [0, 2, 4])).is_full

    def test_extend_wrong_monoid(self, mod3, zn3):
        """Testa ideal fora da fonte"""
        with pytest.raises(SourceMismatch):
            extend(mod3, make_ideal(zn3, [0]))

    def test_contraction_of_extension_contains_ideal(self, mod3, zn6_lattice):
        """Testa I ⊆ (I^e)^c"""
        for ideal in zn6_lattice:
            assert ideal.issubset(contract(mod3, extend(mod3, ideal)))


@pytest.mark.unit
@pytest.mark.morphisms
class TestKernel:
    """Testes para o núcleo e a condição de Rees"""

    def test_kernel_is_congruence(self, mod3):
        """Testa que ker(φ) é uma congruência"""
        congruence = kernel(mod3)

        assert congruence.is_congruence()
        assert (0, 3) in congruence
        assert (1, 4) in congruence
        assert (1, 2) not in congruence

    def test_identity_kernel_is_trivial(self, zn6):
        """Testa núcleo do homomorfismo identidade"""
        congruence = kernel(identity_hom(zn6))

        assert len(congruence.pairs) == 6
        assert kernel_condition_rees(identity_hom(zn6))

    def test_rees_containment(self, mod3, zn6):
        """Testa inclusão na congruência de Rees"""
        congruence = kernel(mod3)

        assert rees_congruence_contains(congruence, zn6.full_bits)
        assert not rees_congruence_contains(congruence, zn6.principal_bits[2])

    def test_kernel_condition_fails_for_mod3(self, mod3):
        """Testa que (1, 4) ∈ ker escapa da congruência de Rees de <2>"""
        assert not kernel_condition_rees(mod3)


@pytest.mark.unit
@pytest.mark.morphisms
class TestEnumerateHomomorphisms:
    """Testes para a busca de homomorfismos"""

    def test_surjections_zn6_to_zn3(self, zn6, zn3):
        """Testa os epimorfismos Z6 -> Z3"""
        found = enumerate_homomorphisms(zn6, zn3, surjective_only=True)
        images = sorted(phi.images for phi in found)

        assert images == [(0, 1, 0, 0, 0, 2), (0, 1, 2, 0, 1, 2)]
        assert all(phi.is_surjective for phi in found)

    def test_all_homomorphisms_are_valid(self, zn6, zn3):
        """Testa que cada mapa encontrado passa na validação"""
        found = enumerate_homomorphisms(zn6, zn3)

        assert len(found) >= 3
        for phi in found:
            make_homomorphism(zn6, zn3, phi.images)
            assert phi(zn6.identity) == zn3.identity

    def test_larger_target(self, zn3, zn6):
        """Testa que não há epimorfismo para alvo maior"""
        assert enumerate_homomorphisms(zn3, zn6, surjective_only=True) == []

    def test_automorphisms(self):
        """Testa automorfismos de Z5 (mapas x -> x^k com k invertível mod 4)"""
        z5 = zn_mul(5)
        found = enumerate_homomorphisms(z5, z5, surjective_only=True)

        assert len(found) == 2
        assert (0, 1, 2, 3, 4) in {phi.images for phi in found}


@pytest.mark.unit
@pytest.mark.morphisms
class TestInverseImage:
    """Testes para a contração de irredutíveis ao longo de epimorfismos"""

    def test_mod3_contracts_irreducibles(self, mod3, zn6_lattice, zn3):
        """Testa que irredutíveis de Z3 contraem para irredutíveis de Z6"""
        report = check_inverse_image_irreducible(mod3, zn6_lattice, enumerate_ideals(zn3))

        assert report.kernel_condition_rees is False
        assert report.pointed is True
        assert [record.contraction for record in report.records] == [[0, 3], [0, 1, 2, 3, 4, 5]]
        assert all(record.contraction_irreducible for record in report.records)
        assert report.violations == []
        assert report.counterexamples == []

    def test_not_surjective(self, constant_one, zn6_lattice, zn3):
        """Testa que mapa não sobrejetor é rejeitado"""
        with pytest.raises(NotSurjective) as exc_info:
            check_inverse_image_irreducible(constant_one, zn6_lattice, enumerate_ideals(zn3))

        assert exc_info.value.missing == 0

    def test_report_serializes(self, mod3, zn6_lattice, zn3):
        """Testa serialização do relatório"""
        record = check_inverse_image_irreducible(mod3, zn6_lattice, enumerate_ideals(zn3)).to_dict()

        assert record["source"] == "Z6"
        assert record["target"] == "Z3"
        assert record["images"] == [0, 1, 2, 0, 1, 2]
        assert record["pointed"] is True
