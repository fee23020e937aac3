"""
Schemas dos relatórios gerados pelo motor de ideais
"""
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from src.monoid_ideals.algebra.ideals import Ideal
from src.monoid_ideals.config.settings import settings


class PropertyStatus(str, Enum):
    """Resultado de uma propriedade num monoide"""
    PASS = "pass"
    FAIL = "fail"
    COUNTEREXAMPLE = "counterexample"
    SKIPPED = "skipped"


class DecompositionKind(str, Enum):
    """Tipos de decomposição"""
    IRREDUCIBLE = "irreducible"
    PRIMARY = "primary"
    IRREDUCIBLE_PRIMARY = "irreducible-primary"


class OutputFormat(str, Enum):
    """Formatos de saída da CLI"""
    TABLE = "table"
    JSON = "json"


@dataclass
class IdealClassification:
    """Classificação completa de um ideal"""
    members: List[int] = field(default_factory=list)
    proper: bool = False
    prime: bool = False
    semiprime: bool = False
    primary: bool = False
    maximal: bool = False
    irreducible: bool = False
    strongly_irreducible: bool = False
    radical: List[int] = field(default_factory=list)
    minimal_irreducible_over: Optional[List[int]] = None
    minimal_irreducibles_over: Optional[List[List[int]]] = None  # só com --all

    def to_dict(self):
        record = asdict(self)
        if self.minimal_irreducibles_over is None:
            del record["minimal_irreducibles_over"]
        return record


@dataclass
class DecompositionReport:
    """Família mínima (ou não) de ideais cuja interseção é o alvo"""
    target: Ideal
    components: Tuple[Ideal, ...]
    kind: DecompositionKind
    minimal: bool

    def to_dict(self):
        return {
            "target": self.target.to_dict(),
            "components": [component.to_dict() for component in self.components],
            "kind": self.kind.value,
            "minimal": self.minimal,
        }


@dataclass
class IdealCorrespondenceReport:
    """Ideais próprios de M_S contra ideais de M dentro de M∖S"""
    monoid: str = ""
    multiplicative_set: List[int] = field(default_factory=list)
    quotient_size: int = 0
    local_proper_ideals: List[List[int]] = field(default_factory=list)
    base_ideals_avoiding_s: List[List[int]] = field(default_factory=list)
    saturated_ideals: List[List[int]] = field(default_factory=list)
    matching: List[Dict[str, List[int]]] = field(default_factory=list)
    collapsed: List[List[List[int]]] = field(default_factory=list)
    literal_bijection: bool = False
    saturated_bijection: bool = False
    violations: List[str] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


@dataclass
class IrreducibleCorrespondenceReport:
    """Ideais fortemente irredutíveis próprios de M_S contra irredutíveis de M em C"""
    monoid: str = ""
    multiplicative_set: List[int] = field(default_factory=list)
    local_side: List[List[int]] = field(default_factory=list)
    base_side: List[List[int]] = field(default_factory=list)
    pairs: List[Dict[str, List[int]]] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    @property
    def is_bijection(self) -> bool:
        return not self.violations

    def to_dict(self):
        record = asdict(self)
        record["bijection"] = self.is_bijection
        return record


@dataclass
class PrimaryExtensionReport:
    """Irredutível, primário e disjunto de S estende a fortemente irredutível e primário"""
    monoid: str = ""
    multiplicative_set: List[int] = field(default_factory=list)
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


@dataclass
class PrimaryLocalEquivalenceReport:
    """As três afirmações sobre M_m, M e M_P avaliadas diretamente"""
    monoid: str = ""
    local_at_maximal: bool = False
    global_statement: bool = False
    local_at_primes: bool = False
    primes_checked: List[List[int]] = field(default_factory=list)
    witnesses: List[str] = field(default_factory=list)

    @property
    def equivalent(self) -> bool:
        return self.local_at_maximal == self.global_statement == self.local_at_primes

    def to_dict(self):
        record = asdict(self)
        record["equivalent"] = self.equivalent
        return record


@dataclass
class InverseImageRecord:
    target_ideal: List[int] = field(default_factory=list)
    contraction: List[int] = field(default_factory=list)
    contraction_irreducible: bool = False


@dataclass
class InverseImageReport:
    """Contração de ideais irredutíveis ao longo de um epimorfismo"""
    source: str = ""
    target: str = ""
    images: List[int] = field(default_factory=list)
    kernel_condition_rees: bool = False
    pointed: bool = False  # phi(0) = 0
    interpretation: str = (
        "ker(phi) is contained in the Rees congruence of <x> "
        "for every x with phi(x) != phi(0)"
    )
    records: List[InverseImageRecord] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


@dataclass
class UniquenessRecord:
    """Busca exaustiva de decomposições primárias mínimas num monoide"""
    monoid: str = ""
    hypothesis: bool = False  # todo ideal primário é irredutível
    decomposition_counts: List[Dict[str, object]] = field(default_factory=list)
    multiple_found: bool = False
    violations: List[str] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


@dataclass
class PropertyResult:
    """Uma linha da suíte de teoremas: (propriedade, monoide)"""
    property_id: str = ""
    monoid: str = ""
    status: str = PropertyStatus.PASS.value
    strict: bool = True
    anchor: str = ""
    details: List[str] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


@dataclass
class SuiteReport:
    """Relatório agregado da suíte de teoremas"""
    results: List[PropertyResult] = field(default_factory=list)
    validation_errors: List[str] = field(default_factory=list)
    homs: List[Dict[str, object]] = field(default_factory=list)

    @property
    def failed(self) -> List[PropertyResult]:
        return [r for r in self.results if r.status == PropertyStatus.FAIL.value]

    @property
    def exit_code(self) -> int:
        if self.validation_errors:
            return 2
        return 1 if self.failed else 0

    def counts(self) -> Dict[str, int]:
        totals = {status.value: 0 for status in PropertyStatus}
        for result in self.results:
            totals[result.status] += 1
        return totals

    def to_dict(self):
        return {
            "schema": settings.REPORT_SCHEMA_VERSION,
            "command": "check-theorems",
            "validation_errors": list(self.validation_errors),
            "results": [result.to_dict() for result in self.results],
            "homs": [dict(hom) for hom in self.homs],
            "summary": self.counts(),
        }
