"""
CLI principal - Analisa ideais de monoides finitos e roda a suíte de teoremas
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

from src.monoid_ideals.algebra.classify import classify_ideal
from src.monoid_ideals.algebra.decomposition import irreducible_decomposition
from src.monoid_ideals.algebra.ideals import (
    Ideal,
    IdealLattice,
    colon,
    enumerate_ideals,
    is_distributive,
    make_ideal,
    radical,
)
from src.monoid_ideals.algebra.localization import (
    check_ideal_correspondence,
    check_irreducible_correspondence,
    check_primary_extension,
    localize,
    multiplicative_set,
)
from src.monoid_ideals.algebra.monoid_core import FiniteMonoid, units
from src.monoid_ideals.checks.theorem_suite import (
    FAMILIES,
    load_corpus_from_yaml,
    property_ids,
    run_theorem_suite,
)
from src.monoid_ideals.config.run_config import RunConfig
from src.monoid_ideals.config.settings import settings
from src.monoid_ideals.errors import ConfigurationError, MonoidIdealsError
from src.monoid_ideals.formats.cayley import format_monoid, parse_hom_file, parse_monoid_file
from src.monoid_ideals.schemas.reports import OutputFormat, PropertyStatus, SuiteReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _index_list(text: str) -> List[int]:
    """'0,2,4' -> [0, 2, 4]"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default=OutputFormat.TABLE.value, help="output format")
    common.add_argument("--max-elements", type=int, default=settings.MAX_ELEMENTS,
                        help="largest accepted monoid")
    common.add_argument("--max-ideals", type=int, default=settings.MAX_IDEALS,
                        help="largest accepted ideal lattice")
    common.add_argument("--log-level", default=settings.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])

    parser = argparse.ArgumentParser(
        prog="monoid-ideals",
        description="Ideals of finite pointed commutative monoids",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", parents=[common], help="check a Cayley table")
    validate.add_argument("file", type=Path)

    enumerate_cmd = commands.add_parser("enumerate", parents=[common], help="list every ideal")
    enumerate_cmd.add_argument("--monoid", type=Path, required=True)

    classify = commands.add_parser("classify", parents=[common], help="classify ideals")
    classify.add_argument("--monoid", type=Path, required=True)
    classify.add_argument("--ideal", type=_index_list, help="members, e.g. 0,3 (default: every ideal)")
    classify.add_argument("--all", action="store_true", help="list every minimal irreducible ideal over I")

    radical_cmd = commands.add_parser("radical", parents=[common], help="radical of an ideal")
    radical_cmd.add_argument("--monoid", type=Path, required=True)
    radical_cmd.add_argument("--ideal", type=_index_list, required=True)

    colon_cmd = commands.add_parser("colon", parents=[common], help="colon ideal (I : S)")
    colon_cmd.add_argument("--monoid", type=Path, required=True)
    colon_cmd.add_argument("--ideal", type=_index_list, required=True)
    colon_cmd.add_argument("--set", dest="divisors", type=_index_list, required=True)

    localize_cmd = commands.add_parser("localize", parents=[common], help="build M_S")
    localize_cmd.add_argument("--monoid", type=Path, required=True)
    localize_cmd.add_argument("--set", dest="sset", type=_index_list, required=True)
    localize_cmd.add_argument("--check", action="store_true", help="append the correspondence reports")

    decompose = commands.add_parser("decompose", parents=[common], help="irreducible-primary decomposition")
    decompose.add_argument("--monoid", type=Path, required=True)
    target = decompose.add_mutually_exclusive_group(required=True)
    target.add_argument("--ideal", type=_index_list)
    target.add_argument("--all", action="store_true", help="decompose every ideal")

    suite = commands.add_parser("check-theorems", parents=[common], help="run the theorem suite")
    suite.add_argument("--corpus", type=Path, default=None, help="corpus YAML (default: bundled)")
    suite.add_argument("--theorem", choices=property_ids(), default=None)
    suite.add_argument("--hom", dest="homs", type=Path, action="append", default=[],
                       help="homomorphism file added to the inverse-image sweep (repeatable)")
    suite.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)

    generate = commands.add_parser("generate", parents=[common], help="print a family member")
    generate.add_argument("family", choices=sorted(FAMILIES))
    generate.add_argument("param", type=int)

    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    inputs = [path for path in (getattr(args, "file", None), getattr(args, "monoid", None)) if path]
    return RunConfig(
        command=args.command,
        inputs=inputs,
        corpus=getattr(args, "corpus", None),
        homs=getattr(args, "homs", []),
        max_elements=args.max_elements,
        max_ideals=args.max_ideals,
        antichain_budget=settings.antichain_budget_from_env(),
        output_format=args.output_format,
        seed=getattr(args, "seed", settings.DEFAULT_SEED),
        theorem=getattr(args, "theorem", None),
        log_level=args.log_level,
    )


def configure_logging(level: str) -> None:
    """Logs vão para stderr; stdout fica só com os relatórios"""
    logging.basicConfig(
        level=getattr(logging, level),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


# ---------------------------------------------------------------------------
# Saída
# ---------------------------------------------------------------------------

def emit_json(command: str, payload: Dict) -> None:
    document = {"schema": settings.REPORT_SCHEMA_VERSION, "command": command}
    document.update(payload)
    print(json.dumps(document, indent=2, sort_keys=True))


def _labels(m: FiniteMonoid, ideal: Ideal) -> str:
    return "{" + ", ".join(m.labels[a] for a in ideal.members) + "}"


def _flag(value: bool) -> str:
    return "yes" if value else "-"


def monoid_dict(m: FiniteMonoid) -> Dict:
    return {
        "name": m.name,
        "size": m.size,
        "identity": m.identity,
        "zero": m.zero,
        "labels": list(m.labels),
        "table": [list(row) for row in m.table],
    }


# ---------------------------------------------------------------------------
# Subcomandos
# ---------------------------------------------------------------------------

def _load(config: RunConfig) -> FiniteMonoid:
    return parse_monoid_file(config.inputs[0], config.max_elements)


def _lattice(m: FiniteMonoid, config: RunConfig) -> IdealLattice:
    return enumerate_ideals(m, config.max_ideals)


def cmd_validate(args, config: RunConfig) -> int:
    m = _load(config)
    if config.output_format == OutputFormat.JSON.value:
        emit_json("validate", {"monoid": monoid_dict(m), "units": sorted(units(m)), "valid": True})
    else:
        print(f"{m.name}: valid pointed commutative monoid with {m.size} elements")
        print(f"  identity: {m.labels[m.identity]} | zero: {m.labels[m.zero]} | units: {len(units(m))}")
    return EXIT_OK


def cmd_enumerate(args, config: RunConfig) -> int:
    m = _load(config)
    lattice = _lattice(m, config)
    distributive, _ = is_distributive(lattice)
    if config.output_format == OutputFormat.JSON.value:
        emit_json("enumerate", {
            "monoid": m.name,
            "count": len(lattice),
            "distributive": distributive,
            "ideals": [ideal.to_dict() for ideal in lattice],
        })
    else:
        print(f"{m.name}: {len(lattice)} ideals")
        print("-" * 80)
        for position, ideal in enumerate(lattice):
            print(f"  {position:>4} | {_labels(m, ideal)}")
    return EXIT_OK


def cmd_classify(args, config: RunConfig) -> int:
    m = _load(config)
    lattice = _lattice(m, config)
    targets = [make_ideal(m, args.ideal)] if args.ideal is not None else list(lattice)
    records = [classify_ideal(ideal, lattice, list_all_minimal=args.all) for ideal in targets]

    if config.output_format == OutputFormat.JSON.value:
        emit_json("classify", {"monoid": m.name, "ideals": [record.to_dict() for record in records]})
        return EXIT_OK

    print(f"{m.name}: classification of {len(records)} ideal(s)")
    print("=" * 80)
    print(f"  {'ideal':<24} | prop | prime | semi | prim | max | irr | s.irr | radical")
    print("-" * 80)
    for ideal, record in zip(targets, records):
        print(
            f"  {_labels(m, ideal):<24} | "
            f"{_flag(record.proper):<4} | {_flag(record.prime):<5} | {_flag(record.semiprime):<4} | "
            f"{_flag(record.primary):<4} | {_flag(record.maximal):<3} | {_flag(record.irreducible):<3} | "
            f"{_flag(record.strongly_irreducible):<5} | {record.radical}"
        )
        if record.minimal_irreducibles_over:
            print(f"  {'':<24}   minimal irreducibles over: {record.minimal_irreducibles_over}")
    print("=" * 80)
    return EXIT_OK


def cmd_radical(args, config: RunConfig) -> int:
    m = _load(config)
    ideal = make_ideal(m, args.ideal)
    root = radical(ideal)
    if config.output_format == OutputFormat.JSON.value:
        emit_json("radical", {"monoid": m.name, "ideal": ideal.to_dict(), "radical": root.to_dict()})
    else:
        print(f"sqrt({_labels(m, ideal)}) = {_labels(m, root)}")
    return EXIT_OK


def cmd_colon(args, config: RunConfig) -> int:
    m = _load(config)
    ideal = make_ideal(m, args.ideal)
    quotient = colon(ideal, args.divisors)
    if config.output_format == OutputFormat.JSON.value:
        emit_json("colon", {
            "monoid": m.name,
            "ideal": ideal.to_dict(),
            "set": sorted(set(args.divisors)),
            "colon": quotient.to_dict(),
        })
    else:
        divisors = "{" + ", ".join(m.labels[a] for a in sorted(set(args.divisors))) + "}"
        print(f"({_labels(m, ideal)} : {divisors}) = {_labels(m, quotient)}")
    return EXIT_OK


def cmd_localize(args, config: RunConfig) -> int:
    m = _load(config)
    loc = localize(m, multiplicative_set(m, args.sset))

    checks = {}
    if args.check:
        base_lattice = _lattice(m, config)
        local_lattice = _lattice(loc.quotient, config)
        checks = {
            "ideal_correspondence": check_ideal_correspondence(loc, base_lattice, local_lattice).to_dict(),
            "irreducible_correspondence": check_irreducible_correspondence(loc, base_lattice, local_lattice).to_dict(),
            "primary_extension": check_primary_extension(loc, base_lattice, local_lattice).to_dict(),
        }

    if config.output_format == OutputFormat.JSON.value:
        payload = {
            "monoid": m.name,
            "multiplicative_set": list(loc.sset.members),
            "quotient": monoid_dict(loc.quotient),
            "classes": loc.classes(),
        }
        payload.update(checks)
        emit_json("localize", payload)
        return EXIT_OK

    print(format_monoid(loc.quotient), end="")
    print("# classes")
    for label, fractions in loc.classes().items():
        print(f"# {label}: {' '.join(fractions)}")
    if checks:
        print(json.dumps(checks, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_decompose(args, config: RunConfig) -> int:
    m = _load(config)
    lattice = _lattice(m, config)
    targets = list(lattice) if args.all else [make_ideal(m, args.ideal)]
    reports = [irreducible_decomposition(ideal, lattice) for ideal in targets]

    if config.output_format == OutputFormat.JSON.value:
        decompositions = []
        for report in reports:
            record = report.to_dict()
            record["classification"] = [
                classify_ideal(component, lattice).to_dict() for component in report.components
            ]
            decompositions.append(record)
        emit_json("decompose", {"monoid": m.name, "decompositions": decompositions})
        return EXIT_OK

    for report in reports:
        components = " ∩ ".join(_labels(m, component) for component in report.components) or "(empty family)"
        print(f"{_labels(m, report.target)} = {components}  [{report.kind.value}, minimal={report.minimal}]")
    return EXIT_OK


def cmd_check_theorems(args, config: RunConfig) -> int:
    corpus, errors = load_corpus_from_yaml(config.corpus, config.max_elements)
    homs = []
    for path in config.homs:
        try:
            homs.append(parse_hom_file(path, config.max_elements))
        except (MonoidIdealsError, OSError) as exc:
            errors.append(f"{path}: {exc}")

    report = run_theorem_suite(corpus, config, homs=homs, validation_errors=errors)
    if config.output_format == OutputFormat.JSON.value:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print_suite_report(report)
    return report.exit_code


def print_suite_report(report: SuiteReport) -> None:
    """Uma linha por (propriedade, monoide), erros de validação primeiro"""
    for error in report.validation_errors:
        print(f"[INVALID] {error}")
    print("=" * 80)
    print("THEOREM SUITE")
    print("=" * 80)
    for result in report.results:
        tag = f"[{result.status.upper()}]"
        strict = "" if result.strict else " (non-strict)"
        print(f"{tag:<17} {result.property_id:<36} {result.monoid}{strict}")
        if result.status in (PropertyStatus.FAIL.value, PropertyStatus.COUNTEREXAMPLE.value):
            for detail in result.details:
                print(f"{'':<17}   {detail}")
    print("-" * 80)
    counts = report.counts()
    print("  " + " | ".join(f"{status}: {count}" for status, count in counts.items()))
    print("=" * 80)


def cmd_generate(args, config: RunConfig) -> int:
    m = FAMILIES[args.family](args.param, max_elements=config.max_elements)
    if config.output_format == OutputFormat.JSON.value:
        emit_json("generate", {"monoid": monoid_dict(m)})
    else:
        print(format_monoid(m), end="")
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "radical": cmd_radical,
    "colon": cmd_colon,
    "localize": cmd_localize,
    "decompose": cmd_decompose,
    "check-theorems": cmd_check_theorems,
    "generate": cmd_generate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ponto de entrada da CLI"""
    args = build_parser().parse_args(argv)
    try:
        config = build_run_config(args)
    except ValidationError as exc:
        print(f"error: invalid options: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    configure_logging(config.log_level)
    try:
        return COMMANDS[config.command](args, config)
    except (MonoidIdealsError, OSError, ValueError) as exc:
        logger.debug("input error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
