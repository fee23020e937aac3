"""
Procedimentos de decisão para as classes de ideais
(próprio, primo, semiprimo, primário, maximal, irredutível, fortemente irredutível)
"""
from typing import List, Optional

from src.monoid_ideals.algebra.ideals import (
    Ideal,
    IdealLattice,
    radical,
)
from src.monoid_ideals.algebra.monoid_core import FiniteMonoid
from src.monoid_ideals.errors import NoProperIdeal, NotProper
from src.monoid_ideals.schemas.reports import IdealClassification


def is_proper(ideal: Ideal) -> bool:
    return not ideal.is_full


def is_prime(ideal: Ideal) -> bool:
    """P próprio e xy ∈ P implica x ∈ P ou y ∈ P"""
    if not is_proper(ideal):
        return False
    m = ideal.monoid
    bits = ideal.bits
    outside = [a for a in m.elements if not bits >> a & 1]
    # basta olhar pares fora de P
    for x in outside:
        row = m.table[x]
        for y in outside:
            if bits >> row[y] & 1:
                return False
    return True


def is_prime_by_ideals(ideal: Ideal, lattice: IdealLattice) -> bool:
    """Critério por ideais: IJ ⊆ P implica I ⊆ P ou J ⊆ P (P próprio)"""
    if not is_proper(ideal):
        return False
    m = ideal.monoid
    for first in lattice:
        if first.issubset(ideal):
            continue
        for second in lattice:
            if second.issubset(ideal):
                continue
            if m.multiply_sets(first.bits, second.bits) & ~ideal.bits == 0:
                return False
    return True


def is_semiprime(ideal: Ideal) -> bool:
    """√I = I"""
    return radical(ideal).bits == ideal.bits


def is_semiprime_by_squares(ideal: Ideal, lattice: IdealLattice) -> bool:
    """Critério por ideais: J² ⊆ I implica J ⊆ I"""
    m = ideal.monoid
    for other in lattice:
        if other.issubset(ideal):
            continue
        if m.multiply_sets(other.bits, other.bits) & ~ideal.bits == 0:
            return False
    return True


def is_primary(ideal: Ideal) -> bool:
    """I próprio e xy ∈ I implica x ∈ I ou y ∈ √I"""
    if not is_proper(ideal):
        return False
    m = ideal.monoid
    bits = ideal.bits
    root = radical(ideal).bits
    for x in m.elements:
        if bits >> x & 1:
            continue
        row = m.table[x]
        for y in m.elements:
            if bits >> row[y] & 1 and not root >> y & 1:
                return False
    return True


def maximal_ideal(m: FiniteMonoid) -> Ideal:
    """O único ideal maximal: os elementos não invertíveis"""
    bits = m.full_bits & ~m.units_bits
    if bits == 0:
        raise NoProperIdeal()
    return Ideal(m, bits)


def is_maximal(ideal: Ideal) -> bool:
    m = ideal.monoid
    return is_proper(ideal) and ideal.bits == m.full_bits & ~m.units_bits


def is_irreducible(ideal: Ideal, lattice: IdealLattice) -> bool:
    """
    Não existem J, K ≠ I com J ∩ K = I

    O próprio M é irredutível por esta definição (vacuamente).
    """
    above = lattice.supersets(ideal, strict=True)
    for i, first in enumerate(above):
        for second in above[i + 1:]:
            if first.bits & second.bits == ideal.bits:
                return False
    return True


def is_strongly_irreducible(ideal: Ideal, lattice: IdealLattice) -> bool:
    """J ∩ K ⊆ I implica J ⊆ I ou K ⊆ I"""
    outside = [other for other in lattice if not other.issubset(ideal)]
    for i, first in enumerate(outside):
        for second in outside[i:]:
            if first.bits & second.bits & ~ideal.bits == 0:
                return False
    return True


def elementwise_irreducible(ideal: Ideal) -> bool:
    """<m> ∩ <m'> ⊆ I implica m ∈ I ou m' ∈ I (não precisa do reticulado)"""
    m = ideal.monoid
    bits = ideal.bits
    outside = [a for a in m.elements if not bits >> a & 1]
    for i, a in enumerate(outside):
        for b in outside[i:]:
            if m.principal_bits[a] & m.principal_bits[b] & ~bits == 0:
                return False
    return True


def minimal_irreducibles_over(ideal: Ideal, lattice: IdealLattice) -> List[Ideal]:
    """Todos os irredutíveis minimais contendo J, em ordem canônica"""
    if not is_proper(ideal):
        raise NotProper()
    candidates = [
        other for other in lattice.supersets(ideal)
        if is_irreducible(other, lattice)
    ]
    return [
        candidate for candidate in candidates
        if not any(
            other.bits != candidate.bits and other.issubset(candidate)
            for other in candidates
        )
    ]


def minimal_irreducible_over(ideal: Ideal, lattice: IdealLattice) -> Ideal:
    """Um irredutível minimal sobre J; empate resolvido pela ordem canônica"""
    return minimal_irreducibles_over(ideal, lattice)[0]


def all_ideals_comparable(lattice: IdealLattice) -> bool:
    """O reticulado de ideais é uma cadeia"""
    ideals = lattice.ideals
    # em ordem canônica, uma cadeia tem cada ideal contido no seguinte
    return all(ideals[i].issubset(ideals[i + 1]) for i in range(len(ideals) - 1))


def every_proper_ideal_irreducible(lattice: IdealLattice) -> bool:
    return all(is_irreducible(ideal, lattice) for ideal in lattice.proper_ideals)


def first_reducible_primary(lattice: IdealLattice) -> Optional[Ideal]:
    """Primeiro ideal primário redutível em ordem canônica, ou None"""
    for ideal in lattice:
        if is_primary(ideal) and not is_irreducible(ideal, lattice):
            return ideal
    return None


def classify_ideal(
    ideal: Ideal,
    lattice: IdealLattice,
    list_all_minimal: bool = False,
) -> IdealClassification:
    """Registro de classificação usado nos relatórios JSON"""
    proper = is_proper(ideal)
    minimal: Optional[List[int]] = None
    all_minimal: Optional[List[List[int]]] = None
    if proper:
        witnesses = minimal_irreducibles_over(ideal, lattice)
        minimal = list(witnesses[0].members)
        if list_all_minimal:
            all_minimal = [list(w.members) for w in witnesses]
    elif list_all_minimal:
        all_minimal = []

    return IdealClassification(
        members=list(ideal.members),
        proper=proper,
        prime=is_prime(ideal),
        semiprime=is_semiprime(ideal),
        primary=is_primary(ideal),
        maximal=is_maximal(ideal),
        irreducible=is_irreducible(ideal, lattice),
        strongly_irreducible=is_strongly_irreducible(ideal, lattice),
        radical=list(radical(ideal).members),
        minimal_irreducible_over=minimal,
        minimal_irreducibles_over=all_minimal,
    )
