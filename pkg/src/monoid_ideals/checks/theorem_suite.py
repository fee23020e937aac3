"""
Suíte de teoremas: cada propriedade do motor avaliada em cada monoide do corpus

Uma propriedade estrita com violação gera FAIL (código de saída 1). Uma
propriedade não estrita coleta as violações como contraexemplos
(COUNTEREXAMPLE) sem afetar o código de saída. Propriedades fora do
alcance do monoide (ex.: oráculo acima do limite) saem como SKIPPED.
"""
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from src.monoid_ideals.algebra.classify import (
    all_ideals_comparable,
    elementwise_irreducible,
    every_proper_ideal_irreducible,
    is_irreducible,
    is_maximal,
    is_primary,
    is_prime,
    is_prime_by_ideals,
    is_semiprime,
    is_semiprime_by_squares,
    is_strongly_irreducible,
    maximal_ideal,
    minimal_irreducible_over,
)
from src.monoid_ideals.algebra.decomposition import (
    check_uniqueness,
    irreducible_decomposition,
    irreducible_hull,
    is_minimal_family,
    maximal_avoiding,
    primary_decomposition,
)
from src.monoid_ideals.algebra.ideals import (
    Ideal,
    IdealLattice,
    brute_force_ideals,
    colon,
    colon_ideal,
    enumerate_ideals,
    generate,
    intersect_all,
    is_distributive,
    is_ideal_bits,
    is_lattice_closed,
    radical,
    x_closure_bits,
)
from src.monoid_ideals.algebra.localization import (
    LocalizedMonoid,
    MultiplicativeSet,
    check_ideal_correspondence,
    check_irreducible_correspondence,
    check_primary_extension,
    check_primary_local_equivalence,
    contract_from_local,
    enumerate_multiplicative_sets,
    extend_to_local,
    localize,
    multiplicative_closure,
)
from src.monoid_ideals.algebra.monoid_core import (
    FiniteMonoid,
    Homomorphism,
    chain,
    direct_product,
    is_isomorphic,
    is_pointed_hom,
    members_of,
    zn_mul,
)
from src.monoid_ideals.algebra.morphisms import (
    check_inverse_image_irreducible,
    contract,
    enumerate_homomorphisms,
    extend,
    kernel,
)
from src.monoid_ideals.config.run_config import RunConfig
from src.monoid_ideals.config.settings import settings
from src.monoid_ideals.errors import (
    ConfigurationError,
    MonoidIdealsError,
    SearchBudgetExceeded,
)
from src.monoid_ideals.formats.cayley import parse_monoid_file
from src.monoid_ideals.schemas.reports import PropertyResult, PropertyStatus, SuiteReport

logger = logging.getLogger(__name__)

MAX_DETAILS = 20

FAMILIES: Dict[str, Callable[..., FiniteMonoid]] = {
    "zn_mul": zn_mul,
    "chain": chain,
}


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

def _build_member(entry: Dict, base_dir: Path, max_elements: int) -> FiniteMonoid:
    if "file" in entry:
        return parse_monoid_file(base_dir / entry["file"], max_elements)
    family = entry.get("family")
    if family not in FAMILIES:
        raise ConfigurationError(f"unknown family {family!r}")
    return FAMILIES[family](int(entry["param"]), max_elements=max_elements)


def load_corpus_from_yaml(
    yaml_path: Optional[Path] = None,
    max_elements: Optional[int] = None,
) -> Tuple[List[FiniteMonoid], List[str]]:
    """
    Carrega o corpus do arquivo YAML

    Args:
        yaml_path: caminho do YAML. Se None, usa o corpus padrão.
        max_elements: limite de tamanho dos monoides

    Returns:
        (monoides válidos, erros de validação por entrada)
    """
    yaml_path = Path(yaml_path) if yaml_path is not None else settings.CORPUS_CONFIG
    cap = settings.MAX_ELEMENTS if max_elements is None else max_elements

    with open(yaml_path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f) or {}
    if not isinstance(config.get("corpus"), list):
        raise ConfigurationError(f"{yaml_path}: missing 'corpus' list")

    monoids: List[FiniteMonoid] = []
    errors: List[str] = []
    for position, entry in enumerate(config["corpus"], start=1):
        try:
            if "product" in entry:
                first, second = entry["product"]
                monoids.append(direct_product(
                    _build_member(first, yaml_path.parent, cap),
                    _build_member(second, yaml_path.parent, cap),
                    max_elements=cap,
                ))
            elif "params" in entry:
                for param in entry["params"]:
                    monoids.append(_build_member({"family": entry["family"], "param": param}, yaml_path.parent, cap))
            else:
                monoids.append(_build_member(entry, yaml_path.parent, cap))
        except (MonoidIdealsError, ValueError, KeyError, TypeError) as exc:
            errors.append(f"corpus entry {position}: {exc}")

    return monoids, errors


def create_default_corpus() -> List[FiniteMonoid]:
    """Corpus padrão sem depender do YAML"""
    corpus = [zn_mul(n) for n in range(2, 13)]
    corpus += [chain(k) for k in range(1, 7)]
    corpus.append(direct_product(zn_mul(2), zn_mul(3)))
    corpus.append(direct_product(zn_mul(4), chain(2)))
    return corpus


# ---------------------------------------------------------------------------
# Contexto por monoide
# ---------------------------------------------------------------------------

@dataclass
class MonoidContext:
    """Dados derivados de um monoide, calculados uma vez e compartilhados"""
    monoid: FiniteMonoid
    corpus: Sequence[FiniteMonoid]
    config: RunConfig
    homs: Sequence[Homomorphism] = ()
    lattices: Dict[FiniteMonoid, IdealLattice] = field(default_factory=dict)

    def lattice_of(self, m: FiniteMonoid) -> IdealLattice:
        if m not in self.lattices:
            self.lattices[m] = enumerate_ideals(m, self.config.max_ideals)
        return self.lattices[m]

    @cached_property
    def lattice(self) -> IdealLattice:
        return self.lattice_of(self.monoid)

    @cached_property
    def multiplicative_sets(self) -> List[MultiplicativeSet]:
        """
        Exaustivo até LOCALIZATION_EXHAUSTIVE_MAX elementos; acima disso,
        fechos de cada elemento e pares sorteados com a semente da execução
        """
        m = self.monoid
        if m.size <= settings.LOCALIZATION_EXHAUSTIVE_MAX:
            return [sset for sset in enumerate_multiplicative_sets(m) if not sset.contains_zero]

        found = {}
        for a in m.elements:
            sset = multiplicative_closure(m, [a])
            found[sset.bits] = sset
        rng = random.Random(f"{self.config.seed}:{m.name}")
        for _ in range(settings.LOCALIZATION_SAMPLE_SIZE):
            sset = multiplicative_closure(m, rng.sample(range(m.size), 2))
            found[sset.bits] = sset
        return [
            found[bits] for bits in sorted(found)
            if not found[bits].contains_zero
        ]

    @cached_property
    def localizations(self) -> List[Tuple[LocalizedMonoid, IdealLattice]]:
        result = []
        for sset in self.multiplicative_sets:
            loc = localize(self.monoid, sset)
            result.append((loc, enumerate_ideals(loc.quotient, self.config.max_ideals)))
        return result

    @cached_property
    def surjections(self) -> List[Homomorphism]:
        """Epimorfismos para alvos do corpus (n ≤ HOM_SWEEP_MAX_ELEMENTS) e os fornecidos"""
        source = self.monoid
        found: List[Homomorphism] = []
        if source.size <= settings.HOM_SWEEP_MAX_ELEMENTS:
            for target in self.corpus:
                if target.size <= source.size:
                    found.extend(enumerate_homomorphisms(source, target, surjective_only=True))
        found.extend(
            phi for phi in self.homs
            if phi.source == source and phi.is_surjective
        )
        return found


# ---------------------------------------------------------------------------
# Propriedades
# ---------------------------------------------------------------------------

Check = Callable[[MonoidContext], Optional[List[str]]]


@dataclass(frozen=True)
class TheoremProperty:
    """Propriedade registrada: identificador, âncora, rigor e verificação"""
    property_id: str
    anchor: str
    check: Check
    strict: bool = True


def _m(ideal: Ideal) -> List[int]:
    return list(ideal.members)


def check_ideal_oracle(ctx: MonoidContext) -> Optional[List[str]]:
    if ctx.monoid.size > settings.BRUTE_FORCE_MAX_ELEMENTS:
        return None
    expected = {ideal.bits for ideal in brute_force_ideals(ctx.monoid)}
    found = {ideal.bits for ideal in ctx.lattice}
    violations = [f"missing {list(members_of(bits))}" for bits in sorted(expected - found)]
    violations += [f"spurious {list(members_of(bits))}" for bits in sorted(found - expected)]
    return violations


def check_lattice_distributive(ctx: MonoidContext) -> List[str]:
    violations = []
    closed, pair = is_lattice_closed(ctx.lattice)
    if not closed:
        violations.append(f"not closed under union/intersection: {_m(pair[0])}, {_m(pair[1])}")
    distributive, triple = is_distributive(ctx.lattice)
    if not distributive:
        violations.append(f"distributivity fails on {[_m(ideal) for ideal in triple]}")
    return violations


def check_x_system_axioms(ctx: MonoidContext) -> Optional[List[str]]:
    m = ctx.monoid
    if m.size > settings.X_SYSTEM_MAX_ELEMENTS:
        return None
    subsets = range(1, 1 << m.size)
    closure = {a: x_closure_bits(m, a) for a in subsets}
    violations = []
    for a in subsets:
        if a & ~closure[a]:
            violations.append(f"A not in A_x for A={list(members_of(a))}")
        for b in subsets:
            if a & ~closure[b] == 0 and closure[a] & ~closure[b]:
                violations.append(f"A in B_x but A_x not in B_x: A={list(members_of(a))}, B={list(members_of(b))}")
            left = m.multiply_sets(a, closure[b])
            right = closure[b] & closure[m.multiply_sets(a, b)]
            if left & ~right:
                violations.append(f"A·B_x not in B_x ∩ (AB)_x: A={list(members_of(a))}, B={list(members_of(b))}")
    return violations


def check_product_in_intersection(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    for first in ctx.lattice:
        for second in ctx.lattice:
            bits = m.multiply_sets(first.bits, second.bits)
            if bits & ~(first.bits & second.bits) or not is_ideal_bits(m, bits):
                violations.append(f"IJ for I={_m(first)}, J={_m(second)}")
    return violations


def check_principal_product(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    for i in m.elements:
        for j in m.elements:
            bits = m.multiply_sets(m.principal_bits[i], m.principal_bits[j])
            if bits != m.principal_bits[m.table[i][j]]:
                violations.append(f"<{i}><{j}> != <{m.table[i][j]}>")
    return violations


def check_maximal_is_non_units(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    if not m.units_bits >> m.identity & 1:
        violations.append("identity is not a unit")
    if m.multiply_sets(m.units_bits, m.units_bits) & ~m.units_bits:
        violations.append("units not closed under the operation")
    if m.size == 1:
        return violations
    mx = maximal_ideal(m)
    if not is_ideal_bits(m, mx.bits):
        violations.append("non-units do not form an ideal")
    by_definition = [
        ideal for ideal in ctx.lattice.proper_ideals
        if not any(
            other.bits != ideal.bits and ideal.issubset(other)
            for other in ctx.lattice.proper_ideals
        )
    ]
    if [ideal.bits for ideal in by_definition] != [mx.bits]:
        violations.append(f"maximal proper ideals {[_m(ideal) for ideal in by_definition]} != {_m(mx)}")
    flagged = [ideal for ideal in ctx.lattice if is_maximal(ideal)]
    if [ideal.bits for ideal in flagged] != [mx.bits]:
        violations.append("is_maximal does not single out the non-units")
    return violations


def check_prime_criterion(ctx: MonoidContext) -> List[str]:
    return [
        f"{_m(ideal)}: elementwise={is_prime(ideal)}"
        for ideal in ctx.lattice
        if is_prime(ideal) != is_prime_by_ideals(ideal, ctx.lattice)
    ]


def check_semiprime_criterion(ctx: MonoidContext) -> List[str]:
    return [
        f"{_m(ideal)}: radical={is_semiprime(ideal)}"
        for ideal in ctx.lattice
        if is_semiprime(ideal) != is_semiprime_by_squares(ideal, ctx.lattice)
    ]


def check_radical_closure(ctx: MonoidContext) -> List[str]:
    violations = []
    for ideal in ctx.lattice:
        root = radical(ideal)
        if not ideal.issubset(root):
            violations.append(f"{_m(ideal)} not in its radical")
        if radical(root) != root:
            violations.append(f"radical of {_m(ideal)} is not idempotent")
        if root not in ctx.lattice:
            violations.append(f"radical of {_m(ideal)} is not an ideal")
    return violations


def check_colon_monotone(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    for ideal in ctx.lattice:
        if colon(ideal, [m.identity]) != ideal:
            violations.append(f"({_m(ideal)} : {{1}}) != I")
        for divisor in ctx.lattice:
            quotient = colon_ideal(ideal, divisor)
            if not ideal.issubset(quotient) or quotient not in ctx.lattice:
                violations.append(f"({_m(ideal)} : {_m(divisor)}) does not contain I or is not an ideal")
            for larger in ctx.lattice.supersets(divisor, strict=True):
                if not colon_ideal(ideal, larger).issubset(quotient):
                    violations.append(f"colon of {_m(ideal)} not antitone in {_m(divisor)} ⊆ {_m(larger)}")
    return violations


def check_irreducible_equivalence(ctx: MonoidContext) -> List[str]:
    violations = []
    for ideal in ctx.lattice:
        flags = (
            is_irreducible(ideal, ctx.lattice),
            is_strongly_irreducible(ideal, ctx.lattice),
            elementwise_irreducible(ideal),
        )
        if len(set(flags)) != 1:
            violations.append(f"{_m(ideal)}: irreducible/strong/elementwise = {flags}")
    return violations


def check_prime_strongly_irreducible(ctx: MonoidContext) -> List[str]:
    return [
        f"prime {_m(ideal)} is not strongly irreducible"
        for ideal in ctx.lattice
        if is_prime(ideal) and not is_strongly_irreducible(ideal, ctx.lattice)
    ]


def check_prime_iff_semiprime_irreducible(ctx: MonoidContext) -> List[str]:
    violations = []
    for ideal in ctx.lattice.proper_ideals:
        right = is_semiprime(ideal) and is_irreducible(ideal, ctx.lattice)
        if is_prime(ideal) != right:
            violations.append(f"{_m(ideal)}: prime={is_prime(ideal)}, semiprime∧irreducible={right}")
    return violations


def check_maximal_strongly_irreducible(ctx: MonoidContext) -> Optional[List[str]]:
    if ctx.monoid.size == 1:
        return None
    mx = maximal_ideal(ctx.monoid)
    if is_strongly_irreducible(mx, ctx.lattice):
        return []
    return [f"maximal ideal {_m(mx)} is not strongly irreducible"]


def check_comparable_iff_irreducible(ctx: MonoidContext) -> List[str]:
    chain_like = all_ideals_comparable(ctx.lattice)
    all_irreducible = every_proper_ideal_irreducible(ctx.lattice)
    if chain_like == all_irreducible:
        return []
    return [f"comparable={chain_like}, every proper irreducible={all_irreducible}"]


def check_minimal_irreducible_over(ctx: MonoidContext) -> List[str]:
    violations = []
    for ideal in ctx.lattice.proper_ideals:
        witness = minimal_irreducible_over(ideal, ctx.lattice)
        if not ideal.issubset(witness) or not is_irreducible(witness, ctx.lattice):
            violations.append(f"witness {_m(witness)} over {_m(ideal)} is not an irreducible superset")
        for other in ctx.lattice.supersets(ideal):
            if other.bits != witness.bits and other.issubset(witness) and is_irreducible(other, ctx.lattice):
                violations.append(f"{_m(other)} is a smaller irreducible over {_m(ideal)}")
    return violations


def _primes_up_to(n: int) -> List[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def check_prime_generated_irreducible(ctx: MonoidContext) -> Optional[List[str]]:
    """
    Em zn_mul(n): <p> para cada primo p ≤ n e <P> para cada conjunto P de
    primos que dividem n

    Um primo que não divide n é unidade e gera M, então conjuntos que o
    contêm geram M e não precisam ser enumerados.
    """
    m = ctx.monoid
    if m.size < 2 or m != zn_mul(m.size, max_elements=m.size):
        return None
    primes = _primes_up_to(m.size)
    divisors = [p for p in primes if m.size % p == 0]
    families = [(p,) for p in primes]
    families += [
        subset
        for r in range(2, len(divisors) + 1)
        for subset in combinations(divisors, r)
    ]
    violations = []
    for family in families:
        ideal = generate(m, [p % m.size for p in family])
        if not is_irreducible(ideal, ctx.lattice):
            violations.append(f"<{list(family)}> = {_m(ideal)} is reducible")
    return violations


def _irreducibles(ctx: MonoidContext) -> List[Ideal]:
    return [ideal for ideal in ctx.lattice if is_irreducible(ideal, ctx.lattice)]


def check_colon_identities(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    irreducibles = _irreducibles(ctx)
    for ideal in irreducibles:
        for j in ctx.lattice:
            by_j = colon_ideal(ideal, j)
            for k in ctx.lattice:
                by_jk = colon(ideal, members_of(m.multiply_sets(j.bits, k.bits)))
                if colon_ideal(by_j, k) != by_jk or colon_ideal(colon_ideal(ideal, k), j) != by_jk:
                    violations.append(f"((I:J):K) = (I:JK) = ((I:K):J) fails for I={_m(ideal)}, J={_m(j)}, K={_m(k)}")
                union_bits = j.bits | k.bits
                if colon(ideal, members_of(union_bits)).bits != by_j.bits & colon_ideal(ideal, k).bits:
                    violations.append(f"(I : J∪K) != (I:J)∩(I:K) for I={_m(ideal)}, J={_m(j)}, K={_m(k)}")
        for other in irreducibles:
            meet = intersect_all(m, [ideal, other])
            for j in ctx.lattice:
                if colon_ideal(meet, j).bits != colon_ideal(ideal, j).bits & colon_ideal(other, j).bits:
                    violations.append(f"(I∩I' : J) != (I:J)∩(I':J) for I={_m(ideal)}, I'={_m(other)}, J={_m(j)}")
    return violations


def check_colon_irreducible(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    lattice = ctx.lattice
    violations = []
    irreducibles = _irreducibles(ctx)
    for ideal in irreducibles:
        for j in lattice:
            by_j = colon_ideal(ideal, j)
            if not is_irreducible(by_j, lattice):
                violations.append(f"(I:J)={_m(by_j)} reducible for I={_m(ideal)}, J={_m(j)}")
                continue
            for k in lattice:
                nested = colon_ideal(by_j, k)
                if not is_irreducible(nested, lattice):
                    violations.append(f"((I:J):K)={_m(nested)} reducible for I={_m(ideal)}, J={_m(j)}, K={_m(k)}")
                joined = colon(ideal, members_of(j.bits | k.bits))
                if not is_irreducible(joined, lattice):
                    violations.append(f"(I:J∪K)={_m(joined)} reducible for I={_m(ideal)}, J={_m(j)}, K={_m(k)}")
        for other in irreducibles:
            for j in lattice:
                meet = colon_ideal(intersect_all(m, [ideal, other]), j)
                if not is_irreducible(meet, lattice):
                    violations.append(f"(I∩I':J)={_m(meet)} reducible for I={_m(ideal)}, I'={_m(other)}, J={_m(j)}")
    return violations


def check_irreducible_representation(ctx: MonoidContext) -> List[str]:
    violations = []
    for ideal in ctx.lattice:
        hull = irreducible_hull(ideal, ctx.lattice)
        if intersect_all(ctx.monoid, hull.components) != ideal:
            violations.append(f"irreducibles over {_m(ideal)} do not intersect to it")
    return violations


def check_maximal_avoiding(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    for ideal in ctx.lattice:
        for x in m.elements:
            if x in ideal:
                continue
            avoiding = maximal_avoiding(ideal, x, ctx.lattice)
            if not is_irreducible(avoiding, ctx.lattice):
                violations.append(f"maximal ideal over {_m(ideal)} avoiding {x} is reducible")
            expected = sum(1 << a for a in m.elements if not m.principal_bits[a] >> x & 1)
            if avoiding.bits != expected:
                violations.append(f"maximal ideal over {_m(ideal)} avoiding {x} is not {{m | x ∉ <m>}}")
    return violations


def check_decomposition_soundness(ctx: MonoidContext) -> List[str]:
    violations = []
    for ideal in ctx.lattice:
        for report in (irreducible_decomposition(ideal, ctx.lattice), primary_decomposition(ideal, ctx.lattice)):
            kind = report.kind.value
            if intersect_all(ctx.monoid, report.components) != ideal:
                violations.append(f"{kind} decomposition of {_m(ideal)} does not intersect to it")
            if not report.minimal or not is_minimal_family(ideal, report.components):
                violations.append(f"{kind} decomposition of {_m(ideal)} is not minimal")
            for component in report.components:
                if not is_primary(component):
                    violations.append(f"{kind} component {_m(component)} of {_m(ideal)} is not primary")
                if kind != "primary" and not is_irreducible(component, ctx.lattice):
                    violations.append(f"{kind} component {_m(component)} of {_m(ideal)} is reducible")
    return violations


def check_irreducible_primary(ctx: MonoidContext) -> List[str]:
    return [
        f"irreducible {_m(ideal)} is not primary"
        for ideal in ctx.lattice.proper_ideals
        if is_irreducible(ideal, ctx.lattice) and not is_primary(ideal)
    ]


def check_decomposition_uniqueness(ctx: MonoidContext) -> List[str]:
    try:
        record = check_uniqueness(ctx.lattice, ctx.config.antichain_budget)
    except SearchBudgetExceeded as exc:
        return [str(exc)]
    if record.multiple_found:
        logger.info("%s: several minimal primary decompositions (hypothesis fails)", ctx.monoid.name)
    return record.violations


def check_localization_construction(ctx: MonoidContext) -> List[str]:
    m = ctx.monoid
    violations = []
    for loc, local_lattice in ctx.localizations:
        label = f"S={list(loc.sset.members)}"
        if loc.quotient.size > m.size:
            violations.append(f"{label}: |M_S| > |M|")
        if loc.sset.bits & ~m.units_bits == 0 and is_isomorphic(m, loc.quotient) is None:
            violations.append(f"{label}: S inside the units but M_S is not isomorphic to M")
        for ideal in ctx.lattice:
            if ideal.meets(loc.sset.bits):
                continue
            if not ideal.issubset(contract_from_local(loc, extend_to_local(loc, ideal))):
                violations.append(f"{label}: contraction of the extension of {_m(ideal)} lost elements")
        for local in local_lattice:
            if extend_to_local(loc, contract_from_local(loc, local)) != local:
                violations.append(f"{label}: extension of the contraction of {_m(local)} differs")
    return violations


def check_ideal_correspondence_saturated(ctx: MonoidContext) -> List[str]:
    violations = []
    for loc, local_lattice in ctx.localizations:
        report = check_ideal_correspondence(loc, ctx.lattice, local_lattice)
        violations += [f"S={report.multiplicative_set}: {v}" for v in report.violations]
    return violations


def check_ideal_correspondence_literal(ctx: MonoidContext) -> List[str]:
    violations = []
    for loc, local_lattice in ctx.localizations:
        report = check_ideal_correspondence(loc, ctx.lattice, local_lattice)
        if not report.literal_bijection:
            violations.append(
                f"S={report.multiplicative_set}: ideals avoiding S collapse to one "
                f"ideal of M_S: {report.collapsed}"
            )
    return violations


def check_irreducible_correspondence_sweep(ctx: MonoidContext) -> List[str]:
    violations = []
    for loc, local_lattice in ctx.localizations:
        report = check_irreducible_correspondence(loc, ctx.lattice, local_lattice)
        violations += [f"S={report.multiplicative_set}: {v}" for v in report.violations]
    return violations


def check_primary_extension_sweep(ctx: MonoidContext) -> List[str]:
    violations = []
    for loc, local_lattice in ctx.localizations:
        report = check_primary_extension(loc, ctx.lattice, local_lattice)
        violations += [f"S={report.multiplicative_set}: {v}" for v in report.violations]
    return violations


def check_primary_local(ctx: MonoidContext) -> List[str]:
    report = check_primary_local_equivalence(ctx.monoid, ctx.lattice)
    if report.equivalent:
        return []
    return [
        f"(M_m, M, M_P) = ({report.local_at_maximal}, {report.global_statement}, "
        f"{report.local_at_primes}); witnesses {report.witnesses}"
    ]


def check_contraction_properties(ctx: MonoidContext) -> Optional[List[str]]:
    if not ctx.surjections:
        return None
    violations = []
    for phi in ctx.surjections:
        label = f"phi={list(phi.images)} onto {phi.target.name}"
        if not kernel(phi).is_congruence():
            violations.append(f"{label}: kernel is not a congruence")
        target_lattice = ctx.lattice_of(phi.target)
        for ideal in target_lattice:
            contraction = contract(phi, ideal)
            if contraction not in ctx.lattice:
                violations.append(f"{label}: J^c of {_m(ideal)} is not an ideal")
            if not ideal.is_full and contraction.is_full:
                violations.append(f"{label}: J^c of proper {_m(ideal)} is not proper")
            if is_prime(ideal) and not is_prime(contraction):
                violations.append(f"{label}: J^c of prime {_m(ideal)} is not prime")
            if extend(phi, contraction) != ideal:
                violations.append(f"{label}: (J^c)^e != J for J={_m(ideal)}")
            for other in target_lattice:
                meet = contract(phi, intersect_all(phi.target, [ideal, other]))
                if meet.bits != contraction.bits & contract(phi, other).bits:
                    violations.append(f"{label}: contraction does not preserve {_m(ideal)} ∩ {_m(other)}")
    return violations


def check_inverse_image(ctx: MonoidContext) -> Optional[List[str]]:
    if not ctx.surjections:
        return None
    violations = []
    for phi in ctx.surjections:
        report = check_inverse_image_irreducible(phi, ctx.lattice, ctx.lattice_of(phi.target))
        violations += [f"with kernel condition: {v}" for v in report.violations]
        violations += [f"without kernel condition: {v}" for v in report.counterexamples]
    return violations


PROPERTIES: Tuple[TheoremProperty, ...] = (
    TheoremProperty("ideal-enumeration-oracle", "enumeration equals the subset filter", check_ideal_oracle),
    TheoremProperty("ideal-lattice-distributive", "ideals under inclusion form a distributive lattice", check_lattice_distributive),
    TheoremProperty("x-system-axioms", "A_x = MA ∪ A satisfies the x-system axioms", check_x_system_axioms),
    TheoremProperty("product-in-intersection", "IJ ⊆ I ∩ J", check_product_in_intersection),
    TheoremProperty("principal-product", "(a)(b) = (ab)", check_principal_product),
    TheoremProperty("maximal-is-non-units", "maximal ideal = M \\ U(M)", check_maximal_is_non_units),
    TheoremProperty("prime-ideal-criterion", "P prime iff IJ ⊆ P forces I ⊆ P or J ⊆ P", check_prime_criterion),
    TheoremProperty("semiprime-square-criterion", "I semiprime iff J² ⊆ I forces J ⊆ I", check_semiprime_criterion),
    TheoremProperty("radical-closure", "rad(I) = {a : a^k ∈ I}", check_radical_closure),
    TheoremProperty("colon-monotone", "(I : S) is an ideal containing I", check_colon_monotone),
    TheoremProperty("irreducible-triple-equivalence", "irreducible = elementwise irreducible = strongly irreducible", check_irreducible_equivalence),
    TheoremProperty("prime-strongly-irreducible", "prime implies strongly irreducible", check_prime_strongly_irreducible),
    TheoremProperty("prime-iff-semiprime-and-irreducible", "prime iff semiprime and irreducible", check_prime_iff_semiprime_irreducible),
    TheoremProperty("maximal-strongly-irreducible", "maximal ideal is strongly irreducible", check_maximal_strongly_irreducible),
    TheoremProperty("comparable-iff-all-irreducible", "chain of ideals iff every proper ideal irreducible", check_comparable_iff_irreducible),
    TheoremProperty("minimal-irreducible-over", "minimal irreducible ideals over I exist", check_minimal_irreducible_over),
    TheoremProperty("prime-generated-irreducible", "ideals of Z/nZ generated by primes are irreducible", check_prime_generated_irreducible),
    TheoremProperty("colon-identities", "((I:J):K) = (I:JK) = ((I:K):J)", check_colon_identities),
    TheoremProperty("colon-irreducible", "(I:J) irreducible for irreducible I", check_colon_irreducible, strict=False),
    TheoremProperty("irreducible-representation", "I = ∩ of irreducibles containing I", check_irreducible_representation),
    TheoremProperty("maximal-avoiding-irreducible", "maximal J ⊇ I with x ∉ J is irreducible", check_maximal_avoiding),
    TheoremProperty("decomposition-soundness", "decompositions intersect back to I", check_decomposition_soundness),
    TheoremProperty("irreducible-implies-primary", "irreducible implies primary", check_irreducible_primary),
    TheoremProperty("primary-decomposition-uniqueness", "minimal primary decomposition is unique", check_decomposition_uniqueness),
    TheoremProperty("localization-construction", "M_S is a pointed commutative monoid", check_localization_construction),
    TheoremProperty("ideal-correspondence-saturated", "I ↦ I_S bijective on saturated ideals", check_ideal_correspondence_saturated),
    TheoremProperty("ideal-correspondence-literal", "I ↦ I_S bijective on ideals missing S", check_ideal_correspondence_literal, strict=False),
    TheoremProperty("irreducible-correspondence", "irreducibles of M_S = irreducibles of M missing S", check_irreducible_correspondence_sweep),
    TheoremProperty("primary-extension", "primary I missing S extends to primary I_S", check_primary_extension_sweep),
    TheoremProperty("primary-local-equivalence", "primary iff irreducible at a prime", check_primary_local),
    TheoremProperty("contraction-properties", "J^c is a proper ideal, prime for prime J, (J^c)^e = J", check_contraction_properties),
    TheoremProperty("inverse-image-irreducible", "φ⁻¹(J) irreducible for irreducible J", check_inverse_image, strict=False),
)


def property_ids() -> List[str]:
    return [prop.property_id for prop in PROPERTIES]


# ---------------------------------------------------------------------------
# Execução
# ---------------------------------------------------------------------------

def _evaluate(prop: TheoremProperty, ctx: MonoidContext) -> PropertyResult:
    result = PropertyResult(
        property_id=prop.property_id,
        monoid=ctx.monoid.name,
        strict=prop.strict,
        anchor=prop.anchor,
    )
    violations = prop.check(ctx)
    if violations is None:
        result.status = PropertyStatus.SKIPPED.value
    elif not violations:
        result.status = PropertyStatus.PASS.value
    else:
        result.status = (PropertyStatus.FAIL if prop.strict else PropertyStatus.COUNTEREXAMPLE).value
        result.details = violations[:MAX_DETAILS]
        if len(violations) > MAX_DETAILS:
            result.details.append(f"... and {len(violations) - MAX_DETAILS} more")
    return result


def run_theorem_suite(
    corpus: Sequence[FiniteMonoid],
    config: RunConfig,
    homs: Sequence[Homomorphism] = (),
    validation_errors: Sequence[str] = (),
) -> SuiteReport:
    """
    Avalia cada propriedade em cada monoide, em ordem determinística
    (propriedades na ordem do registro, monoides na ordem do corpus)

    Monoides-fonte de homomorfismos fornecidos que não estão no corpus
    entram no fim da lista.
    """
    selected = list(PROPERTIES)
    if config.theorem is not None:
        selected = [prop for prop in PROPERTIES if prop.property_id == config.theorem]
        if not selected:
            raise ConfigurationError(f"unknown theorem {config.theorem!r}")

    monoids = list(corpus)
    for phi in homs:
        if phi.source not in monoids:
            monoids.append(phi.source)

    lattices: Dict[FiniteMonoid, IdealLattice] = {}
    contexts = [
        MonoidContext(monoid=m, corpus=corpus, config=config, homs=homs, lattices=lattices)
        for m in monoids
    ]

    report = SuiteReport(validation_errors=list(validation_errors))
    for phi in homs:
        report.homs.append({
            "source": phi.source.name,
            "target": phi.target.name,
            "images": list(phi.images),
            "surjective": phi.is_surjective,
            "pointed": is_pointed_hom(phi),
        })
    for prop in selected:
        logger.info("checking %s on %d monoids", prop.property_id, len(contexts))
        for ctx in contexts:
            report.results.append(_evaluate(prop, ctx))
    return report
