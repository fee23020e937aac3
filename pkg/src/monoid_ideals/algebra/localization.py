"""
Localização M_S de um monoide finito num conjunto multiplicativo S

Constrói a tabela de M_S por fecho explícito da relação
(m, s) ~ (m', s') <=> existe u ∈ S com (ms')u = (m's)u
e verifica as correspondências entre ideais de M_S e ideais de M.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from src.monoid_ideals.algebra.classify import (
    first_reducible_primary,
    is_irreducible,
    is_primary,
    is_prime,
    is_strongly_irreducible,
    maximal_ideal,
)
from src.monoid_ideals.algebra.ideals import (
    Ideal,
    IdealLattice,
    canonical_key,
    enumerate_ideals,
    generate,
)
from src.monoid_ideals.algebra.monoid_core import (
    FiniteMonoid,
    bits_of,
    members_of,
    validate,
)
from src.monoid_ideals.errors import (
    BaseMismatch,
    IndexOutOfRange,
    NotMultiplicativelyClosed,
    QuotientMismatch,
    ZeroInS,
)
from src.monoid_ideals.schemas.reports import (
    IdealCorrespondenceReport,
    IrreducibleCorrespondenceReport,
    PrimaryExtensionReport,
    PrimaryLocalEquivalenceReport,
)

logger = logging.getLogger(__name__)

Fraction = Tuple[int, int]


@dataclass(frozen=True)
class MultiplicativeSet:
    """Subconjunto de M que contém 1 e é fechado pela operação"""
    monoid: FiniteMonoid
    bits: int

    def __contains__(self, element: int) -> bool:
        return bool(self.bits >> element & 1)

    @property
    def members(self) -> Tuple[int, ...]:
        return members_of(self.bits)

    @property
    def contains_zero(self) -> bool:
        return self.monoid.zero in self


def multiplicative_set(m: FiniteMonoid, members: Iterable[int]) -> MultiplicativeSet:
    """Valida 1 ∈ S e ss' ∈ S; a testemunha vai no erro"""
    members = list(members)
    for a in members:
        if not isinstance(a, int) or not 0 <= a < m.size:
            raise IndexOutOfRange(f"element {a!r} outside [0,{m.size})")
    bits = bits_of(members)
    if not bits >> m.identity & 1:
        raise NotMultiplicativelyClosed("identity missing", (m.identity,))
    for s in members_of(bits):
        for t in members_of(bits):
            st = m.table[s][t]
            if not bits >> st & 1:
                raise NotMultiplicativelyClosed(f"{s}*{t}={st} not in S", (s, t))
    return MultiplicativeSet(monoid=m, bits=bits)


def multiplicative_closure(m: FiniteMonoid, generators: Iterable[int]) -> MultiplicativeSet:
    """Menor conjunto multiplicativo contendo 1 e os geradores"""
    bits = (1 << m.identity) | bits_of(generators)
    while True:
        grown = bits | m.multiply_sets(bits, bits)
        if grown == bits:
            return MultiplicativeSet(monoid=m, bits=bits)
        bits = grown


def enumerate_multiplicative_sets(m: FiniteMonoid, include_zero: bool = False) -> List[MultiplicativeSet]:
    """
    Todos os conjuntos multiplicativos de M, em ordem canônica

    Varredura de subconjuntos (2^(n-1) candidatos); chamadores limitam n.
    """
    others = [a for a in m.elements if a != m.identity]
    found = []
    for mask in range(1 << len(others)):
        bits = 1 << m.identity
        for position, a in enumerate(others):
            if mask >> position & 1:
                bits |= 1 << a
        if not include_zero and bits >> m.zero & 1 and m.size > 1:
            continue
        if m.multiply_sets(bits, bits) & ~bits == 0:
            found.append(bits)
    found.sort(key=lambda bits: canonical_key(m, bits))
    return [MultiplicativeSet(monoid=m, bits=bits) for bits in found]


@dataclass(frozen=True, eq=False)
class LocalizedMonoid:
    """M_S junto com o mapa de classes (m, s) -> índice em M_S"""
    base: FiniteMonoid
    sset: MultiplicativeSet
    quotient: FiniteMonoid
    class_of: Dict[Fraction, int]
    representatives: Tuple[Fraction, ...]

    def to_fraction(self, a: int) -> int:
        """Classe de a/1"""
        return self.class_of[(a, self.base.identity)]

    @property
    def degenerate(self) -> bool:
        return self.sset.contains_zero

    def classes(self) -> Dict[str, List[str]]:
        """Rótulo de cada classe -> frações m/s que ela contém"""
        labels = self.base.labels
        grouped: Dict[str, List[str]] = {label: [] for label in self.quotient.labels}
        for (a, s), index in sorted(self.class_of.items()):
            grouped[self.quotient.labels[index]].append(f"{labels[a]}/{labels[s]}")
        return grouped


def _equivalent(m: FiniteMonoid, sset: MultiplicativeSet, first: Fraction, second: Fraction) -> bool:
    (a, s), (b, t) = first, second
    left = m.table[a][t]
    right = m.table[b][s]
    return any(m.table[left][u] == m.table[right][u] for u in sset.members)


def localize(m: FiniteMonoid, sset: MultiplicativeSet) -> LocalizedMonoid:
    """
    Constrói M_S

    As classes saem do fecho por union-find sobre M×S; o representante de
    cada classe é o par lexicograficamente menor. A tabela induzida passa
    pela mesma validação de qualquer monoide.
    """
    if sset.monoid != m:
        raise BaseMismatch("multiplicative set")
    if sset.contains_zero:
        logger.warning(
            "%s: 0 in S=%s, the localization is the trivial monoid",
            m.name or "monoid", list(sset.members),
        )

    fractions = [(a, s) for a in m.elements for s in sset.members]
    parent = list(range(len(fractions)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, first in enumerate(fractions):
        for j in range(i + 1, len(fractions)):
            if find(i) == find(j):
                continue
            if _equivalent(m, sset, first, fractions[j]):
                root_i, root_j = find(i), find(j)
                # a raiz fica sempre no menor índice
                parent[max(root_i, root_j)] = min(root_i, root_j)

    roots = sorted({find(i) for i in range(len(fractions))})
    index_of_root = {root: index for index, root in enumerate(roots)}
    class_of = {fraction: index_of_root[find(i)] for i, fraction in enumerate(fractions)}
    representatives = tuple(fractions[root] for root in roots)

    table = [
        [
            class_of[(m.table[a][b], m.table[s][t])]
            for b, t in representatives
        ]
        for a, s in representatives
    ]
    labels = [f"{m.labels[a]}/{m.labels[s]}" for a, s in representatives]
    quotient = validate(
        table,
        class_of[(m.identity, m.identity)],
        class_of[(m.zero, m.identity)],
        labels=labels,
        name=f"{m.name}[{','.join(str(s) for s in sset.members)}]",
    )
    logger.debug("%s: |M_S| = %d", quotient.name, quotient.size)
    return LocalizedMonoid(
        base=m,
        sset=sset,
        quotient=quotient,
        class_of=class_of,
        representatives=representatives,
    )


def extend_to_local(loc: LocalizedMonoid, ideal: Ideal) -> Ideal:
    """I_S = <{m/1 | m ∈ I}>"""
    if ideal.monoid is not loc.base and ideal.monoid != loc.base:
        raise BaseMismatch()
    return generate(loc.quotient, sorted({loc.to_fraction(a) for a in ideal.members}))


def contract_from_local(loc: LocalizedMonoid, ideal: Ideal) -> Ideal:
    """I^c = {m | m/1 ∈ I}"""
    if ideal.monoid is not loc.quotient and ideal.monoid != loc.quotient:
        raise QuotientMismatch()
    bits = bits_of(a for a in loc.base.elements if loc.to_fraction(a) in ideal)
    return Ideal(loc.base, bits)


def is_contraction_closed(loc: LocalizedMonoid, ideal: Ideal) -> bool:
    """(I_S)^c = I, ou seja I pertence ao conjunto C das contrações"""
    return contract_from_local(loc, extend_to_local(loc, ideal)).bits == ideal.bits


def _lattices(
    loc: LocalizedMonoid,
    lattice_base: Optional[IdealLattice],
    lattice_local: Optional[IdealLattice],
) -> Tuple[IdealLattice, IdealLattice]:
    return (
        lattice_base if lattice_base is not None else enumerate_ideals(loc.base),
        lattice_local if lattice_local is not None else enumerate_ideals(loc.quotient),
    )


def check_ideal_correspondence(
    loc: LocalizedMonoid,
    lattice_base: Optional[IdealLattice] = None,
    lattice_local: Optional[IdealLattice] = None,
) -> IdealCorrespondenceReport:
    """
    Ideais próprios de M_S contra ideais de M disjuntos de S

    Duas leituras são reportadas: a literal (todos os ideais dentro de M∖S)
    e a saturada (só os ideais fechados por contração). Só a saturada gera
    violações; na literal os grupos que colapsam na mesma extensão ficam
    em `collapsed`.
    """
    if loc.degenerate:
        raise ZeroInS()
    lattice_base, lattice_local = _lattices(loc, lattice_base, lattice_local)
    s_bits = loc.sset.bits

    local_proper = lattice_local.proper_ideals
    avoiding = [ideal for ideal in lattice_base if not ideal.meets(s_bits)]
    saturated = [ideal for ideal in avoiding if is_contraction_closed(loc, ideal)]

    report = IdealCorrespondenceReport(
        monoid=loc.base.name,
        multiplicative_set=list(loc.sset.members),
        quotient_size=loc.quotient.size,
        local_proper_ideals=[list(ideal.members) for ideal in local_proper],
        base_ideals_avoiding_s=[list(ideal.members) for ideal in avoiding],
        saturated_ideals=[list(ideal.members) for ideal in saturated],
    )

    saturated_bits = {ideal.bits for ideal in saturated}
    for local in local_proper:
        contraction = contract_from_local(loc, local)
        report.matching.append({"local": list(local.members), "base": list(contraction.members)})
        if contraction.bits not in saturated_bits:
            report.violations.append(
                f"contraction {list(contraction.members)} of {list(local.members)} "
                f"is not a saturated ideal avoiding S"
            )
        elif extend_to_local(loc, contraction).bits != local.bits:
            report.violations.append(f"extension of the contraction of {list(local.members)} differs")
    for ideal in saturated:
        extension = extend_to_local(loc, ideal)
        if extension.is_full:
            report.violations.append(f"extension of {list(ideal.members)} is not proper")
    report.saturated_bijection = not report.violations

    groups: Dict[int, List[Ideal]] = {}
    for ideal in avoiding:
        groups.setdefault(extend_to_local(loc, ideal).bits, []).append(ideal)
    report.collapsed = [
        [list(ideal.members) for ideal in group]
        for _, group in sorted(groups.items(), key=lambda item: canonical_key(loc.quotient, item[0]))
        if len(group) > 1
    ]
    report.literal_bijection = not report.collapsed and set(groups) == {
        ideal.bits for ideal in local_proper
    }
    return report


def check_irreducible_correspondence(
    loc: LocalizedMonoid,
    lattice_base: Optional[IdealLattice] = None,
    lattice_local: Optional[IdealLattice] = None,
) -> IrreducibleCorrespondenceReport:
    """
    Fortemente irredutíveis próprios de M_S contra irredutíveis de M em C
    disjuntos de S, com as duas composições verificadas
    """
    if loc.degenerate:
        raise ZeroInS()
    lattice_base, lattice_local = _lattices(loc, lattice_base, lattice_local)
    s_bits = loc.sset.bits

    local_side = [
        ideal for ideal in lattice_local.proper_ideals
        if is_strongly_irreducible(ideal, lattice_local)
    ]
    base_side = [
        ideal for ideal in lattice_base
        if not ideal.meets(s_bits)
        and is_irreducible(ideal, lattice_base)
        and is_contraction_closed(loc, ideal)
    ]
    report = IrreducibleCorrespondenceReport(
        monoid=loc.base.name,
        multiplicative_set=list(loc.sset.members),
        local_side=[list(ideal.members) for ideal in local_side],
        base_side=[list(ideal.members) for ideal in base_side],
    )

    for local in local_side:
        contraction = contract_from_local(loc, local)
        report.pairs.append({"local": list(local.members), "base": list(contraction.members)})
        if not is_irreducible(contraction, lattice_base):
            report.violations.append(f"I^c={list(contraction.members)} is not irreducible")
        if contraction.meets(s_bits):
            report.violations.append(f"I^c={list(contraction.members)} meets S")
        if not is_contraction_closed(loc, contraction):
            report.violations.append(f"I^c={list(contraction.members)} is not in C")
        if extend_to_local(loc, contraction).bits != local.bits:
            report.violations.append(f"(I^c)_S differs from I={list(local.members)}")

    for ideal in base_side:
        extension = extend_to_local(loc, ideal)
        if extension.is_full or not is_strongly_irreducible(extension, lattice_local):
            report.violations.append(
                f"I_S of {list(ideal.members)} is not a proper strongly irreducible ideal"
            )
        if contract_from_local(loc, extension).bits != ideal.bits:
            report.violations.append(f"(I_S)^c differs from I={list(ideal.members)}")
    return report


def check_primary_extension(
    loc: LocalizedMonoid,
    lattice_base: Optional[IdealLattice] = None,
    lattice_local: Optional[IdealLattice] = None,
) -> PrimaryExtensionReport:
    """I irredutível, primário e disjunto de S => I_S fortemente irredutível e primário"""
    lattice_base, lattice_local = _lattices(loc, lattice_base, lattice_local)
    report = PrimaryExtensionReport(
        monoid=loc.base.name,
        multiplicative_set=list(loc.sset.members),
    )
    for ideal in lattice_base:
        if ideal.meets(loc.sset.bits):
            continue
        if not (is_irreducible(ideal, lattice_base) and is_primary(ideal)):
            continue
        report.checked += 1
        extension = extend_to_local(loc, ideal)
        if not is_strongly_irreducible(extension, lattice_local):
            report.violations.append(f"I_S of {list(ideal.members)} is not strongly irreducible")
        if not is_primary(extension):
            report.violations.append(f"I_S of {list(ideal.members)} is not primary")
    return report


def check_primary_local_equivalence(
    m: FiniteMonoid,
    lattice: Optional[IdealLattice] = None,
) -> PrimaryLocalEquivalenceReport:
    """
    Avalia as três afirmações num monoide:
    (1) todo primário de M_𝔪 é irredutível;
    (2) todo primário de M é irredutível;
    (3) para todo primo P, todo primário de M_P é irredutível.
    """
    lattice = lattice if lattice is not None else enumerate_ideals(m)
    report = PrimaryLocalEquivalenceReport(monoid=m.name)

    witness = first_reducible_primary(lattice)
    report.global_statement = witness is None
    if witness is not None:
        report.witnesses.append(f"M: {list(witness.members)}")

    if m.size == 1:
        # sem ideais próprios: as três afirmações valem vacuamente
        report.local_at_maximal = True
        report.local_at_primes = True
        return report

    units_set = MultiplicativeSet(monoid=m, bits=m.full_bits & ~maximal_ideal(m).bits)
    at_maximal = localize(m, units_set)
    witness = first_reducible_primary(enumerate_ideals(at_maximal.quotient))
    report.local_at_maximal = witness is None
    if witness is not None:
        report.witnesses.append(f"M_m: {list(witness.members)}")

    report.local_at_primes = True
    for prime in lattice.proper_ideals:
        if not is_prime(prime):
            continue
        report.primes_checked.append(list(prime.members))
        complement = MultiplicativeSet(monoid=m, bits=m.full_bits & ~prime.bits)
        at_prime = localize(m, complement)
        witness = first_reducible_primary(enumerate_ideals(at_prime.quotient))
        if witness is not None:
            report.local_at_primes = False
            report.witnesses.append(f"M_P, P={list(prime.members)}: {list(witness.members)}")
    return report
