"""
Cálculo de ideais: geração, produto, interseção, união, colon, radical
e enumeração exaustiva do reticulado de ideais
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from src.monoid_ideals.algebra.monoid_core import FiniteMonoid, bits_of, members_of
from src.monoid_ideals.config.settings import settings
from src.monoid_ideals.errors import (
    EmptyDivisorSet,
    EmptyGeneratorSet,
    IndexOutOfRange,
    LatticeTooLarge,
    MonoidMismatch,
    NotAnIdeal,
)

logger = logging.getLogger(__name__)


def canonical_key(m: FiniteMonoid, bits: int) -> Tuple[int, str]:
    """Ordem canônica: cardinalidade, depois a string de bits (elemento 0 primeiro)"""
    return bits.bit_count(), "".join("1" if bits >> a & 1 else "0" for a in m.elements)


@dataclass(frozen=True, eq=False)
class Ideal:
    """Ideal de um monoide finito, guardado como vetor de bits de pertinência"""
    monoid: FiniteMonoid
    bits: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.bits == other.bits and (
            self.monoid is other.monoid or self.monoid == other.monoid
        )

    def __hash__(self) -> int:
        return hash(self.bits)

    def __contains__(self, element: int) -> bool:
        return bool(self.bits >> element & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __repr__(self) -> str:
        return f"Ideal({list(self.members)})"

    @property
    def members(self) -> Tuple[int, ...]:
        return members_of(self.bits)

    @property
    def is_full(self) -> bool:
        return self.bits == self.monoid.full_bits

    def issubset(self, other: "Ideal") -> bool:
        return self.bits & ~other.bits == 0

    def meets(self, bits: int) -> bool:
        return self.bits & bits != 0

    @property
    def sort_key(self) -> Tuple[int, str]:
        return canonical_key(self.monoid, self.bits)

    def to_dict(self) -> Dict[str, List[int]]:
        return {"members": list(self.members)}


def _check_elements(m: FiniteMonoid, elements: Iterable[int]) -> List[int]:
    elements = list(elements)
    for a in elements:
        if not isinstance(a, int) or not 0 <= a < m.size:
            raise IndexOutOfRange(f"element {a!r} outside [0,{m.size})", (a,) if isinstance(a, int) else ())
    return elements


def _same_monoid(operation: str, first: Ideal, *others: Ideal) -> FiniteMonoid:
    for other in others:
        if other.monoid is not first.monoid and other.monoid != first.monoid:
            raise MonoidMismatch(operation)
    return first.monoid


def is_ideal_bits(m: FiniteMonoid, bits: int) -> bool:
    """Absorção: a ∈ I implica aM ⊆ I (e I não vazio)"""
    if bits == 0:
        return False
    return all(m.principal_bits[a] & ~bits == 0 for a in members_of(bits))


def make_ideal(m: FiniteMonoid, members: Iterable[int]) -> Ideal:
    """Constrói um ideal a partir dos membros, verificando absorção"""
    members = _check_elements(m, members)
    if not members:
        raise EmptyGeneratorSet()
    bits = bits_of(members)
    for a in members:
        escaped = m.principal_bits[a] & ~bits
        if escaped:
            outside = members_of(escaped)[0]
            multiplier = next(x for x in m.elements if m.table[a][x] == outside)
            raise NotAnIdeal(a, multiplier)
    return Ideal(m, bits)


def generate(m: FiniteMonoid, generators: Iterable[int]) -> Ideal:
    """<S> = S ∪ SM, o menor ideal contendo S"""
    generators = _check_elements(m, generators)
    if not generators:
        raise EmptyGeneratorSet()
    bits = bits_of(generators)
    for s in generators:
        bits |= m.principal_bits[s]
    return Ideal(m, bits)


def principal(m: FiniteMonoid, a: int) -> Ideal:
    return generate(m, [a])


def x_closure_bits(m: FiniteMonoid, bits: int) -> int:
    """A_x = MA ∪ A para um subconjunto arbitrário A (não necessariamente ideal)"""
    return m.multiply_sets(m.full_bits, bits) | bits


def product(first: Ideal, second: Ideal) -> Ideal:
    """IJ = {ij | i ∈ I, j ∈ J}"""
    m = _same_monoid("product", first, second)
    bits = m.multiply_sets(first.bits, second.bits)
    assert bits & ~(first.bits & second.bits) == 0, "IJ must lie in I ∩ J"
    return Ideal(m, bits)


def intersect(first: Ideal, second: Ideal) -> Ideal:
    m = _same_monoid("intersect", first, second)
    return Ideal(m, first.bits & second.bits)


def union(first: Ideal, second: Ideal) -> Ideal:
    m = _same_monoid("union", first, second)
    return Ideal(m, first.bits | second.bits)


def intersect_all(m: FiniteMonoid, ideals: Iterable[Ideal]) -> Ideal:
    """Interseção de uma família; a família vazia dá o monoide inteiro"""
    bits = m.full_bits
    for ideal in ideals:
        bits &= ideal.bits
    return Ideal(m, bits)


def colon(ideal: Ideal, divisors: Iterable[int]) -> Ideal:
    """(I : S) = {m | mS ⊆ I}"""
    m = ideal.monoid
    divisors = _check_elements(m, divisors)
    if not divisors:
        raise EmptyDivisorSet()
    bits = 0
    for a in m.elements:
        row = m.table[a]
        if all(ideal.bits >> row[s] & 1 for s in divisors):
            bits |= 1 << a
    return Ideal(m, bits)


def colon_ideal(ideal: Ideal, divisor: Ideal) -> Ideal:
    """(I : J) para um ideal J"""
    _same_monoid("colon", ideal, divisor)
    return colon(ideal, divisor.members)


def radical(ideal: Ideal) -> Ideal:
    """√I = {m | m^k ∈ I para algum k ≥ 1}"""
    m = ideal.monoid
    bits = 0
    for a in m.elements:
        if any(ideal.bits >> p & 1 for p in m.powers(a)):
            bits |= 1 << a
    return Ideal(m, bits)


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """Todos os ideais de um monoide, sem repetição, em ordem canônica"""
    monoid: FiniteMonoid
    ideals: Tuple[Ideal, ...]

    @cached_property
    def _positions(self) -> Dict[int, int]:
        return {ideal.bits: position for position, ideal in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self) -> Iterator[Ideal]:
        return iter(self.ideals)

    def __contains__(self, item: Union[Ideal, int]) -> bool:
        bits = item.bits if isinstance(item, Ideal) else item
        return bits in self._positions

    def get(self, bits: int) -> Optional[Ideal]:
        position = self._positions.get(bits)
        return None if position is None else self.ideals[position]

    def position(self, ideal: Ideal) -> int:
        return self._positions[ideal.bits]

    @property
    def bottom(self) -> Ideal:
        return self.ideals[0]

    @property
    def top(self) -> Ideal:
        return self.ideals[-1]

    def supersets(self, ideal: Ideal, strict: bool = False) -> List[Ideal]:
        return [
            other for other in self.ideals
            if ideal.issubset(other) and not (strict and other.bits == ideal.bits)
        ]

    @property
    def proper_ideals(self) -> List[Ideal]:
        return [ideal for ideal in self.ideals if not ideal.is_full]


def _sorted_lattice(m: FiniteMonoid, found: Iterable[int]) -> IdealLattice:
    ordered = sorted(found, key=lambda bits: canonical_key(m, bits))
    return IdealLattice(m, tuple(Ideal(m, bits) for bits in ordered))


def enumerate_ideals(m: FiniteMonoid, max_ideals: Optional[int] = None) -> IdealLattice:
    """
    Enumera todos os ideais como fecho por uniões dos ideais principais

    Todo ideal é a união dos principais gerados pelos seus membros,
    então o fecho por uniões de {<a>} é exatamente o reticulado.
    """
    cap = settings.MAX_IDEALS if max_ideals is None else max_ideals
    principals = sorted(set(m.principal_bits))
    found = set(principals)
    if len(found) > cap:
        raise LatticeTooLarge(cap)

    frontier = list(principals)
    while frontier:
        next_frontier = []
        for bits in frontier:
            for generator in principals:
                joined = bits | generator
                if joined not in found:
                    found.add(joined)
                    next_frontier.append(joined)
                    if len(found) > cap:
                        raise LatticeTooLarge(cap)
        frontier = next_frontier

    logger.debug("%s: %d ideais enumerados", m.name or "monoid", len(found))
    return _sorted_lattice(m, found)


def brute_force_ideals(m: FiniteMonoid) -> IdealLattice:
    """Oráculo: testa absorção em todos os 2^n subconjuntos"""
    found = [bits for bits in range(1, 1 << m.size) if is_ideal_bits(m, bits)]
    return _sorted_lattice(m, found)


def is_distributive(lattice: IdealLattice) -> Tuple[bool, Optional[Tuple[Ideal, Ideal, Ideal]]]:
    """
    Verifica A ∩ (B ∪ C) = (A ∩ B) ∪ (A ∩ C) em todas as triplas

    Returns:
        (True, None) ou (False, tripla violadora)
    """
    ideals = lattice.ideals
    for a in ideals:
        for b in ideals:
            for c in ideals:
                left = a.bits & (b.bits | c.bits)
                right = (a.bits & b.bits) | (a.bits & c.bits)
                if left != right or left not in lattice:
                    return False, (a, b, c)
    return True, None


def is_lattice_closed(lattice: IdealLattice) -> Tuple[bool, Optional[Tuple[Ideal, Ideal]]]:
    """Toda união e interseção de dois ideais enumerados está no reticulado"""
    for a in lattice.ideals:
        for b in lattice.ideals:
            if (a.bits | b.bits) not in lattice or (a.bits & b.bits) not in lattice:
                return False, (a, b)
    return True, None
