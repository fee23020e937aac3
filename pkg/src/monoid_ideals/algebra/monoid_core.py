"""
Monoides comutativos finitos pontuados representados por tabela de Cayley
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.monoid_ideals.config.settings import settings
from src.monoid_ideals.errors import (
    BadIdentity,
    BadZero,
    IndexOutOfRange,
    MonoidValidationError,
    NotAHomomorphism,
    NotAssociative,
    NotCommutative,
    SizeOverflow,
)

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


def bits_of(elements: Iterable[int]) -> int:
    """Converte um conjunto de índices em vetor de bits"""
    bits = 0
    for element in elements:
        bits |= 1 << element
    return bits


def members_of(bits: int) -> Tuple[int, ...]:
    """Converte um vetor de bits na lista ordenada de índices"""
    members = []
    index = 0
    while bits:
        if bits & 1:
            members.append(index)
        bits >>= 1
        index += 1
    return tuple(members)


@dataclass(frozen=True)
class FiniteMonoid:
    """
    Monoide comutativo pontuado com elementos densos 0..n-1

    Imutável após a validação; os rótulos servem só para apresentação
    e o nome identifica o monoide nos relatórios (não entra na igualdade).
    """
    size: int
    labels: Tuple[str, ...]
    table: Table
    identity: int
    zero: int
    name: str = field(default="", compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_bits(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def principal_bits(self) -> Tuple[int, ...]:
        """<a> = {a} ∪ aM = aM (pois a·1 = a), como vetor de bits"""
        return tuple(bits_of(row) for row in self.table)

    @cached_property
    def units_bits(self) -> int:
        return bits_of(
            a for a in self.elements
            if any(self.table[a][b] == self.identity for b in self.elements)
        )

    def powers(self, a: int) -> Tuple[int, ...]:
        """
        Potências distintas a, a², a³, ... até a sequência entrar em ciclo

        Num monoide finito a sequência é eventualmente periódica, então
        no máximo n potências distintas aparecem.
        """
        seen = []
        visited = set()
        current = a
        while current not in visited:
            visited.add(current)
            seen.append(current)
            current = self.table[current][a]
        return tuple(seen)

    def multiply_sets(self, left: int, right: int) -> int:
        """Produto de conjuntos ST = {st} sobre vetores de bits"""
        result = 0
        for s in members_of(left):
            row = self.table[s]
            for t in members_of(right):
                result |= 1 << row[t]
        return result

    def label_set(self, bits: int) -> List[str]:
        return [self.labels[a] for a in members_of(bits)]


def validate(
    raw_table: Sequence[Sequence[int]],
    identity: int,
    zero: int,
    labels: Optional[Sequence[str]] = None,
    name: str = "",
    max_elements: Optional[int] = None,
) -> FiniteMonoid:
    """
    Valida uma tabela de Cayley contra os axiomas de monoide pontuado

    A ordem das verificações é: índices, comutatividade, associatividade,
    identidade e zero. O primeiro axioma violado é levantado com a
    testemunha correspondente.

    Args:
        raw_table: matriz n×n de índices
        identity: índice do elemento neutro
        zero: índice do elemento absorvente
        labels: nomes dos elementos (padrão: os próprios índices)
        name: nome usado nos relatórios
        max_elements: limite de tamanho (padrão: settings.MAX_ELEMENTS)

    Returns:
        FiniteMonoid validado
    """
    cap = settings.MAX_ELEMENTS if max_elements is None else max_elements
    n = len(raw_table)
    if n == 0:
        raise IndexOutOfRange("empty table")
    if n > cap:
        raise SizeOverflow(n, cap)

    rows = []
    for i, row in enumerate(raw_table):
        if len(row) != n:
            raise IndexOutOfRange(f"row {i} has {len(row)} entries, expected {n}", (i,))
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or not 0 <= entry < n:
                raise IndexOutOfRange(f"entry ({i},{j}) = {entry!r} outside [0,{n})", (i, j))
        rows.append(tuple(row))
    table = tuple(rows)

    for index, role in ((identity, "identity"), (zero, "zero")):
        if not isinstance(index, int) or not 0 <= index < n:
            raise IndexOutOfRange(f"{role} index {index!r} outside [0,{n})")

    if labels is None:
        labels = [str(a) for a in range(n)]
    labels = tuple(str(label) for label in labels)
    if len(labels) != n:
        raise MonoidValidationError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise MonoidValidationError("labels must be distinct")

    for a in range(n):
        for b in range(a + 1, n):
            if table[a][b] != table[b][a]:
                raise NotCommutative(a, b)

    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_b = table[b]
            row_ab = table[ab]
            for c in range(n):
                if row_a[row_b[c]] != row_ab[c]:
                    raise NotAssociative(a, b, c)

    for a in range(n):
        if table[identity][a] != a:
            raise BadIdentity(a)

    for a in range(n):
        if table[zero][a] != zero:
            raise BadZero(a)
    if n > 1 and identity == zero:
        raise BadZero(zero, "identity and zero coincide")

    logger.debug("%s: tabela %dx%d válida", name or "monoid", n, n)
    return FiniteMonoid(size=n, labels=labels, table=table, identity=identity, zero=zero, name=name)


def zn_mul(n: int, max_elements: Optional[int] = None) -> FiniteMonoid:
    """Monoide multiplicativo de Z/nZ (identidade 1, zero 0)"""
    if n < 1:
        raise ValueError(f"zn_mul needs n >= 1, got {n}")
    table = [[(a * b) % n for b in range(n)] for a in range(n)]
    identity = 1 if n > 1 else 0
    return validate(table, identity, 0, name=f"Z{n}", max_elements=max_elements)


def chain(k: int, max_elements: Optional[int] = None) -> FiniteMonoid:
    """Monoide cadeia {1, a, ..., a^k = 0} com a^i · a^j = a^min(i+j, k)"""
    if k < 1:
        raise ValueError(f"chain needs k >= 1, got {k}")
    table = [[min(i + j, k) for j in range(k + 1)] for i in range(k + 1)]
    labels = ["1", "a"] + [f"a^{i}" for i in range(2, k + 1)]
    return validate(table, 0, k, labels=labels, name=f"C{k}", max_elements=max_elements)


def direct_product(
    m1: FiniteMonoid,
    m2: FiniteMonoid,
    max_elements: Optional[int] = None,
) -> FiniteMonoid:
    """Produto direto com operação por componentes; (i, j) vira i·n2 + j"""
    cap = settings.MAX_ELEMENTS if max_elements is None else max_elements
    n1, n2 = m1.size, m2.size
    if n1 * n2 > cap:
        raise SizeOverflow(n1 * n2, cap)

    def index(i: int, j: int) -> int:
        return i * n2 + j

    table = [
        [
            index(m1.table[i1][i2], m2.table[j1][j2])
            for i2 in range(n1) for j2 in range(n2)
        ]
        for i1 in range(n1) for j1 in range(n2)
    ]
    labels = [f"{x}|{y}" for x in m1.labels for y in m2.labels]
    return validate(
        table,
        index(m1.identity, m2.identity),
        index(m1.zero, m2.zero),
        labels=labels,
        name=f"{m1.name}x{m2.name}",
        max_elements=cap,
    )


def units(m: FiniteMonoid) -> FrozenSet[int]:
    """Elementos invertíveis: {a | existe b com ab = 1}"""
    return frozenset(members_of(m.units_bits))


def _signature(m: FiniteMonoid, a: int) -> Tuple:
    # invariantes preservados por isomorfismo
    return (
        m.table[a][a] == a,
        bool(m.units_bits >> a & 1),
        m.principal_bits[a].bit_count(),
        len(m.powers(a)),
    )


def is_isomorphic(m1: FiniteMonoid, m2: FiniteMonoid) -> Optional[Tuple[int, ...]]:
    """
    Oráculo de isomorfismo para instâncias pequenas

    Returns:
        A bijeção m1 -> m2 como tupla de imagens, ou None se não existir
    """
    if m1.size != m2.size:
        return None
    n = m1.size
    sig1 = [_signature(m1, a) for a in range(n)]
    sig2 = [_signature(m2, b) for b in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None

    images: Dict[int, int] = {m1.identity: m2.identity, m1.zero: m2.zero}
    if sig1[m1.identity] != sig2[m2.identity] or sig1[m1.zero] != sig2[m2.zero]:
        return None
    order = [a for a in range(n) if a not in images]

    def consistent(a: int) -> bool:
        fa = images[a]
        for b, fb in images.items():
            ab = m1.table[a][b]
            if ab in images and images[ab] != m2.table[fa][fb]:
                return False
        return True

    def extend(position: int) -> bool:
        if position == len(order):
            return True
        a = order[position]
        used = set(images.values())
        for candidate in range(n):
            if candidate in used or sig2[candidate] != sig1[a]:
                continue
            images[a] = candidate
            if consistent(a) and extend(position + 1):
                return True
            del images[a]
        return False

    if not all(consistent(a) for a in list(images)):
        return None
    if extend(0):
        return tuple(images[a] for a in range(n))
    return None


@dataclass(frozen=True)
class Homomorphism:
    """
    Homomorfismo de monoides: φ(1) = 1 e φ(mm') = φ(m)φ(m')

    φ(0) = 0 não é exigido; is_pointed_hom informa se vale.
    """
    source: FiniteMonoid
    target: FiniteMonoid
    images: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def image_bits(self, bits: int) -> int:
        return bits_of(self.images[a] for a in members_of(bits))

    @property
    def is_surjective(self) -> bool:
        return self.image_bits(self.source.full_bits) == self.target.full_bits


def make_homomorphism(
    source: FiniteMonoid,
    target: FiniteMonoid,
    images: Sequence[int],
) -> Homomorphism:
    """Valida as duas condições de homomorfismo e constrói o objeto"""
    images = tuple(images)
    if len(images) != source.size:
        raise NotAHomomorphism(f"expected {source.size} images, got {len(images)}")
    for a, fa in enumerate(images):
        if not isinstance(fa, int) or not 0 <= fa < target.size:
            raise NotAHomomorphism(f"image of {a} is {fa!r}, outside the target", (a,))
    if images[source.identity] != target.identity:
        raise NotAHomomorphism("identity is not mapped to identity", (source.identity,))
    for a in source.elements:
        for b in range(a, source.size):
            if images[source.table[a][b]] != target.table[images[a]][images[b]]:
                raise NotAHomomorphism(f"phi({a}*{b}) != phi({a})*phi({b})", (a, b))
    return Homomorphism(source=source, target=target, images=images)


def identity_hom(m: FiniteMonoid) -> Homomorphism:
    return Homomorphism(source=m, target=m, images=tuple(m.elements))


def is_pointed_hom(phi: Homomorphism) -> bool:
    """Verifica a condição mais forte φ(0) = 0"""
    return phi.images[phi.source.zero] == phi.target.zero
