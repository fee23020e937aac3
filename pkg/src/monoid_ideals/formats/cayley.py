"""
Formato texto de tabelas de Cayley e de homomorfismos

Monoide:
    n <identidade> <zero>
    <n rótulos>
    <n linhas com n índices>

Homomorfismo:
    hom <arquivo-fonte> <arquivo-alvo>
    <n imagens>

Linhas em branco e linhas começando com '#' são ignoradas.
Linhas e colunas nos erros começam em 1.
"""
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from src.monoid_ideals.algebra.monoid_core import (
    FiniteMonoid,
    Homomorphism,
    make_homomorphism,
    validate,
)
from src.monoid_ideals.errors import CayleySyntaxError

PathLike = Union[str, Path]

_TOKEN = re.compile(r"\S+")

# (número da linha, [(coluna, token), ...])
Line = Tuple[int, List[Tuple[int, str]]]


def _meaningful_lines(text: str) -> List[Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(match.start() + 1, match.group()) for match in _TOKEN.finditer(raw)]
        lines.append((number, tokens))
    return lines


def _integer(token: Tuple[int, str], line: int, source: str, what: str) -> int:
    column, text = token
    try:
        return int(text)
    except ValueError:
        raise CayleySyntaxError(f"{what} must be an integer, got {text!r}", line, column, source) from None


def parse_monoid_text(
    text: str,
    source: str = "<string>",
    name: str = "",
    max_elements: Optional[int] = None,
) -> FiniteMonoid:
    """
    Lê uma tabela de Cayley e valida os axiomas

    Raises:
        CayleySyntaxError: texto fora do formato (com linha e coluna)
        MonoidValidationError: tabela bem formada que viola um axioma
    """
    lines = _meaningful_lines(text)
    if not lines:
        raise CayleySyntaxError("missing header 'n identity zero'", 1, None, source)

    header_line, header = lines[0]
    if len(header) != 3:
        column = header[3][0] if len(header) > 3 else None
        raise CayleySyntaxError(
            f"header needs 3 fields 'n identity zero', got {len(header)}",
            header_line, column, source,
        )
    n = _integer(header[0], header_line, source, "n")
    identity = _integer(header[1], header_line, source, "identity")
    zero = _integer(header[2], header_line, source, "zero")
    if n < 1:
        raise CayleySyntaxError(f"n must be positive, got {n}", header_line, header[0][0], source)

    if len(lines) < 2:
        raise CayleySyntaxError("missing labels line", header_line + 1, None, source)
    labels_line, label_tokens = lines[1]
    if len(label_tokens) != n:
        column = label_tokens[n][0] if len(label_tokens) > n else None
        raise CayleySyntaxError(
            f"expected {n} labels, got {len(label_tokens)}", labels_line, column, source
        )
    labels = [token for _, token in label_tokens]

    rows = []
    for line_number, tokens in lines[2:2 + n]:
        if len(tokens) != n:
            column = tokens[n][0] if len(tokens) > n else None
            raise CayleySyntaxError(
                f"expected {n} entries, got {len(tokens)}", line_number, column, source
            )
        rows.append([_integer(token, line_number, source, "entry") for token in tokens])

    if len(rows) < n:
        last_line = lines[-1][0]
        raise CayleySyntaxError(f"expected {n} rows, got {len(rows)}", last_line + 1, None, source)
    if len(lines) > 2 + n:
        extra_line = lines[2 + n][0]
        raise CayleySyntaxError("unexpected content after the table", extra_line, 1, source)

    return validate(rows, identity, zero, labels=labels, name=name, max_elements=max_elements)


def parse_monoid_file(path: PathLike, max_elements: Optional[int] = None) -> FiniteMonoid:
    """Lê um arquivo .cay (UTF-8); o nome do monoide é o nome do arquivo sem extensão"""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_monoid_text(text, source=str(path), name=path.stem, max_elements=max_elements)


def format_monoid(m: FiniteMonoid) -> str:
    """Escreve o monoide no formato de tabela de Cayley"""
    width = max(len(str(m.size - 1)), 1)
    lines = []
    if m.name:
        lines.append(f"# {m.name}")
    lines.append(f"{m.size} {m.identity} {m.zero}")
    lines.append(" ".join(m.labels))
    for row in m.table:
        lines.append(" ".join(str(entry).rjust(width) for entry in row))
    return "\n".join(lines) + "\n"


def parse_hom_file(path: PathLike, max_elements: Optional[int] = None) -> Homomorphism:
    """
    Lê um homomorfismo; os caminhos dos monoides são relativos ao arquivo

    Raises:
        CayleySyntaxError: arquivo fora do formato
        NotAHomomorphism: mapa que não preserva 1 ou o produto
    """
    path = Path(path)
    source_name = str(path)
    lines = _meaningful_lines(path.read_text(encoding="utf-8"))
    if not lines:
        raise CayleySyntaxError("missing 'hom <source> <target>' line", 1, None, source_name)

    header_line, header = lines[0]
    if len(header) != 3 or header[0][1] != "hom":
        raise CayleySyntaxError(
            "expected 'hom <source-file> <target-file>'", header_line, header[0][0], source_name
        )
    source = parse_monoid_file(path.parent / header[1][1], max_elements)
    target = parse_monoid_file(path.parent / header[2][1], max_elements)

    if len(lines) != 2:
        line = lines[2][0] if len(lines) > 2 else header_line + 1
        raise CayleySyntaxError("expected exactly one line of images", line, None, source_name)
    images_line, tokens = lines[1]
    images = [_integer(token, images_line, source_name, "image") for token in tokens]
    return make_homomorphism(source, target, images)
