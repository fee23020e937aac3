"""
Contração e extensão de ideais ao longo de homomorfismos, núcleos e
a proposição da imagem inversa de ideais irredutíveis
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from src.monoid_ideals.algebra.classify import is_irreducible
from src.monoid_ideals.algebra.ideals import Ideal, IdealLattice, generate
from src.monoid_ideals.algebra.monoid_core import (
    FiniteMonoid,
    Homomorphism,
    bits_of,
    is_pointed_hom,
    members_of,
)
from src.monoid_ideals.errors import (
    EmptyContraction,
    NotSurjective,
    SourceMismatch,
    TargetMismatch,
)
from src.monoid_ideals.schemas.reports import InverseImageRecord, InverseImageReport

logger = logging.getLogger(__name__)


def _same(first: FiniteMonoid, second: FiniteMonoid) -> bool:
    return first is second or first == second


@dataclass(frozen=True)
class KernelCongruence:
    """ker(φ) = {(m, m') | φ(m) = φ(m')} como conjunto de pares"""
    source: FiniteMonoid
    pairs: FrozenSet[Tuple[int, int]]

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        return pair in self.pairs

    def is_congruence(self) -> bool:
        """Reflexiva, simétrica, transitiva e compatível com a operação"""
        m = self.source
        if any((a, a) not in self.pairs for a in m.elements):
            return False
        if any((b, a) not in self.pairs for a, b in self.pairs):
            return False
        classes: Dict[int, set] = {}
        for a, b in self.pairs:
            classes.setdefault(a, set()).add(b)
        for a, related in classes.items():
            for b in related:
                if not classes[b] <= related:
                    return False
        for a, b in self.pairs:
            for x in m.elements:
                if (m.table[a][x], m.table[b][x]) not in self.pairs:
                    return False
        return True


def contract(phi: Homomorphism, ideal: Ideal) -> Ideal:
    """J^c = φ⁻¹(J)"""
    if not _same(ideal.monoid, phi.target):
        raise TargetMismatch()
    bits = bits_of(a for a in phi.source.elements if phi.images[a] in ideal)
    if bits == 0:
        raise EmptyContraction()
    return Ideal(phi.source, bits)


def extend(phi: Homomorphism, ideal: Ideal) -> Ideal:
    """I^e = <φ(I)>"""
    if not _same(ideal.monoid, phi.source):
        raise SourceMismatch()
    return generate(phi.target, sorted({phi.images[a] for a in ideal.members}))


def kernel(phi: Homomorphism) -> KernelCongruence:
    n = phi.source.size
    pairs = frozenset(
        (a, b) for a in range(n) for b in range(n)
        if phi.images[a] == phi.images[b]
    )
    return KernelCongruence(source=phi.source, pairs=pairs)


def rees_congruence_contains(congruence: KernelCongruence, ideal_bits: int) -> bool:
    """Todo par da congruência é trivial ou tem as duas pontas no ideal"""
    return all(
        a == b or (ideal_bits >> a & 1 and ideal_bits >> b & 1)
        for a, b in congruence.pairs
    )


def kernel_condition_rees(phi: Homomorphism, congruence: Optional[KernelCongruence] = None) -> bool:
    """
    Leitura documentada de "ker(φ) ⊆ <x> para cada x ∉ ker(φ)":
    para todo x com φ(x) ≠ φ(0), ker(φ) está contido na congruência de Rees de <x>
    """
    congruence = congruence or kernel(phi)
    source = phi.source
    zero_image = phi.images[source.zero]
    for x in source.elements:
        if phi.images[x] == zero_image:
            continue
        if not rees_congruence_contains(congruence, source.principal_bits[x]):
            return False
    return True


def enumerate_homomorphisms(
    source: FiniteMonoid,
    target: FiniteMonoid,
    surjective_only: bool = False,
) -> List[Homomorphism]:
    """
    Busca com retrocesso de todos os homomorfismos source -> target

    1 vai para 1; com surjective_only, 0 vai para o zero do alvo (a imagem
    de 0 por um epimorfismo é absorvente, logo é o zero).
    """
    if surjective_only and target.size > source.size:
        return []

    images: List[Optional[int]] = [None] * source.size
    images[source.identity] = target.identity
    if surjective_only:
        if source.zero == source.identity and target.zero != target.identity:
            return []
        images[source.zero] = target.zero

    # pares (x, y) com xy = c, para checar quando c recebe imagem
    factorizations: Dict[int, List[Tuple[int, int]]] = {c: [] for c in source.elements}
    for x in source.elements:
        for y in range(x, source.size):
            factorizations[source.table[x][y]].append((x, y))

    def consistent(a: int) -> bool:
        for b in source.elements:
            if images[b] is None:
                continue
            ab = source.table[a][b]
            if images[ab] is not None and images[ab] != target.table[images[a]][images[b]]:
                return False
        for x, y in factorizations[a]:
            if images[x] is not None and images[y] is not None:
                if images[a] != target.table[images[x]][images[y]]:
                    return False
        return True

    fixed = [a for a in source.elements if images[a] is not None]
    if not all(consistent(a) for a in fixed):
        return []

    order = [a for a in source.elements if images[a] is None]
    found: List[Homomorphism] = []

    def assign(position: int) -> None:
        if position == len(order):
            phi = Homomorphism(source=source, target=target, images=tuple(images))
            if not surjective_only or phi.is_surjective:
                found.append(phi)
            return
        a = order[position]
        for candidate in target.elements:
            images[a] = candidate
            if consistent(a):
                assign(position + 1)
        images[a] = None

    assign(0)
    logger.debug("%s -> %s: %d homomorfismos", source.name, target.name, len(found))
    return found


def check_inverse_image_irreducible(
    phi: Homomorphism,
    lattice_source: IdealLattice,
    lattice_target: IdealLattice,
) -> InverseImageReport:
    """
    Para cada irredutível J do alvo, verifica se J^c é irredutível na fonte

    Com a hipótese do núcleo (leitura de Rees), J^c redutível é violação;
    sem a hipótese, é apenas um contraexemplo registrado.
    """
    if not phi.is_surjective:
        missing = members_of(phi.target.full_bits & ~phi.image_bits(phi.source.full_bits))[0]
        raise NotSurjective(missing)

    hypothesis = kernel_condition_rees(phi)
    report = InverseImageReport(
        source=phi.source.name,
        target=phi.target.name,
        images=list(phi.images),
        kernel_condition_rees=hypothesis,
        pointed=is_pointed_hom(phi),
    )
    for ideal in lattice_target:
        if not is_irreducible(ideal, lattice_target):
            continue
        contraction = contract(phi, ideal)
        irreducible = is_irreducible(contraction, lattice_source)
        report.records.append(InverseImageRecord(
            target_ideal=list(ideal.members),
            contraction=list(contraction.members),
            contraction_irreducible=irreducible,
        ))
        if not irreducible:
            message = (
                f"phi={list(phi.images)}: J={list(ideal.members)} irreducible "
                f"but J^c={list(contraction.members)} is not"
            )
            if hypothesis:
                report.violations.append(message)
            else:
                report.counterexamples.append(message)
    return report
