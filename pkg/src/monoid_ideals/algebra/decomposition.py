"""
Decomposições irredutíveis e primárias, redução a famílias mínimas
e a busca exaustiva usada na verificação de unicidade
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from src.monoid_ideals.algebra.classify import (
    first_reducible_primary,
    is_irreducible,
    is_primary,
)
from src.monoid_ideals.algebra.ideals import Ideal, IdealLattice
from src.monoid_ideals.config.settings import settings
from src.monoid_ideals.errors import ElementInIdeal, SearchBudgetExceeded
from src.monoid_ideals.schemas.reports import (
    DecompositionKind,
    DecompositionReport,
    UniquenessRecord,
)

logger = logging.getLogger(__name__)


def _intersection_bits(full_bits: int, components: Iterable[Ideal]) -> int:
    bits = full_bits
    for component in components:
        bits &= component.bits
    return bits


def is_minimal_family(target: Ideal, components: Sequence[Ideal]) -> bool:
    """Retirar qualquer componente aumenta estritamente a interseção"""
    full = target.monoid.full_bits
    for i in range(len(components)):
        others = _intersection_bits(full, components[:i] + components[i + 1:])
        if others == target.bits:
            return False
    return True


def minimize(target: Ideal, components: Sequence[Ideal]) -> Tuple[Ideal, ...]:
    """
    Elimina componentes redundantes em ordem canônica até um ponto fixo

    Um componente é redundante quando contém a interseção dos demais.
    """
    kept = sorted(set(components), key=lambda ideal: ideal.sort_key)
    full = target.monoid.full_bits
    changed = True
    while changed:
        changed = False
        for i, component in enumerate(kept):
            others = _intersection_bits(full, kept[:i] + kept[i + 1:])
            if others & ~component.bits == 0:
                del kept[i]
                changed = True
                break
    return tuple(kept)


def irreducible_hull(ideal: Ideal, lattice: IdealLattice) -> DecompositionReport:
    """I como interseção de todos os irredutíveis que o contêm (M incluso)"""
    components = tuple(
        other for other in lattice.supersets(ideal)
        if is_irreducible(other, lattice)
    )
    return DecompositionReport(
        target=ideal,
        components=components,
        kind=DecompositionKind.IRREDUCIBLE,
        minimal=False,
    )


def maximal_avoiding(ideal: Ideal, x: int, lattice: IdealLattice) -> Ideal:
    """
    Ideal maximal entre os que contêm I e não contêm x

    Empates (que não ocorrem: o maximal é {m | x ∉ <m>}) são
    resolvidos pela ordem canônica.
    """
    if x in ideal:
        raise ElementInIdeal(x)
    candidates = [other for other in lattice.supersets(ideal) if x not in other]
    maximal = [
        candidate for candidate in candidates
        if not any(
            other.bits != candidate.bits and candidate.issubset(other)
            for other in candidates
        )
    ]
    return maximal[0]


def irreducible_decomposition(ideal: Ideal, lattice: IdealLattice) -> DecompositionReport:
    """
    Família mínima de irredutíveis com interseção I

    Parte de {maximal_avoiding(I, x) | x ∉ I} e minimiza. Os componentes
    são verificados primários; se algum não for, o tipo cai para irreducible.
    """
    m = ideal.monoid
    outside = [x for x in m.elements if x not in ideal]
    components = minimize(ideal, [maximal_avoiding(ideal, x, lattice) for x in outside])

    kind = DecompositionKind.IRREDUCIBLE_PRIMARY
    if not all(is_primary(component) for component in components):
        logger.warning("%s: irreducible component that is not primary over %r", m.name, ideal)
        kind = DecompositionKind.IRREDUCIBLE
    return DecompositionReport(
        target=ideal,
        components=components,
        kind=kind,
        minimal=is_minimal_family(ideal, components),
    )


def primary_decomposition(ideal: Ideal, lattice: IdealLattice) -> DecompositionReport:
    """Reaproveita a decomposição irredutível; recorre à busca exaustiva se preciso"""
    base = irreducible_decomposition(ideal, lattice)
    if base.kind == DecompositionKind.IRREDUCIBLE_PRIMARY:
        components = minimize(ideal, base.components)
    else:
        components = minimal_primary_decompositions(ideal, lattice)[0]
    return DecompositionReport(
        target=ideal,
        components=components,
        kind=DecompositionKind.PRIMARY,
        minimal=is_minimal_family(ideal, components),
    )


def minimal_primary_decompositions(
    ideal: Ideal,
    lattice: IdealLattice,
    budget: Optional[int] = None,
) -> List[Tuple[Ideal, ...]]:
    """
    Todas as decomposições primárias mínimas de I

    Busca em profundidade sobre anticadeias de primários que contêm I.
    Um candidato só entra se for incomparável com os escolhidos e se
    diminuir estritamente a interseção corrente; ao atingir I a família
    é testada quanto à minimalidade e a busca não desce mais.

    Raises:
        SearchBudgetExceeded: se mais de `budget` anticadeias parciais forem visitadas
    """
    cap = settings.ANTICHAIN_BUDGET if budget is None else budget
    m = ideal.monoid
    if ideal.is_full:
        return [()]

    primaries = [other for other in lattice.supersets(ideal) if is_primary(other)]
    found: List[Tuple[Ideal, ...]] = []
    chosen: List[Ideal] = []
    visited = 0

    def search(start: int, current: int) -> None:
        nonlocal visited
        visited += 1
        if visited > cap:
            logger.warning("%s: search budget %d exhausted over %r", m.name, cap, ideal)
            raise SearchBudgetExceeded(cap)
        if current == ideal.bits:
            if is_minimal_family(ideal, chosen):
                found.append(tuple(chosen))
            return
        for position in range(start, len(primaries)):
            candidate = primaries[position]
            if current & ~candidate.bits == 0:
                continue
            if any(candidate.issubset(other) or other.issubset(candidate) for other in chosen):
                continue
            chosen.append(candidate)
            search(position + 1, current & candidate.bits)
            chosen.pop()

    search(0, m.full_bits)
    return found


def check_uniqueness(
    lattice: IdealLattice,
    budget: Optional[int] = None,
) -> UniquenessRecord:
    """
    Conta as decomposições primárias mínimas de cada ideal de um monoide

    Quando todo primário é irredutível, mais de uma decomposição é violação;
    caso contrário apenas registra se houve multiplicidade.
    """
    record = UniquenessRecord(
        monoid=lattice.monoid.name,
        hypothesis=first_reducible_primary(lattice) is None,
    )
    for ideal in lattice:
        decompositions = minimal_primary_decompositions(ideal, lattice, budget)
        record.decomposition_counts.append({
            "ideal": list(ideal.members),
            "count": len(decompositions),
        })
        if len(decompositions) == 1:
            continue
        if record.hypothesis:
            record.violations.append(
                f"{list(ideal.members)} has {len(decompositions)} minimal primary decompositions"
            )
        else:
            record.multiple_found = True
    return record


def decompose_all(lattice: IdealLattice) -> List[DecompositionReport]:
    """Decomposição irredutível-primária de cada ideal, em ordem canônica"""
    return [irreducible_decomposition(ideal, lattice) for ideal in lattice]