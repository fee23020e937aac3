"""
Hierarquia de erros do motor de ideais
"""
from typing import Optional, Tuple


class MonoidIdealsError(Exception):
    """Erro base de todo o pacote"""


class ConfigurationError(MonoidIdealsError):
    """Configuração inválida (variáveis de ambiente, corpus YAML)"""


# Validação de monoides

class MonoidValidationError(MonoidIdealsError):
    """Tabela de Cayley viola um dos axiomas de monoide pontuado"""

    witness: Tuple[int, ...] = ()


class IndexOutOfRange(MonoidValidationError):
    def __init__(self, detail: str, witness: Tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(f"IndexOutOfRange: {detail}")


class NotCommutative(MonoidValidationError):
    def __init__(self, a: int, b: int):
        self.witness = (a, b)
        super().__init__(f"NotCommutative(a={a}, b={b})")


class NotAssociative(MonoidValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"NotAssociative(a={a}, b={b}, c={c})")


class BadIdentity(MonoidValidationError):
    def __init__(self, a: int):
        self.witness = (a,)
        super().__init__(f"BadIdentity(a={a})")


class BadZero(MonoidValidationError):
    def __init__(self, a: int, detail: str = ""):
        self.witness = (a,)
        suffix = f": {detail}" if detail else ""
        super().__init__(f"BadZero(a={a}){suffix}")


class SizeOverflow(MonoidIdealsError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"SizeOverflow: {size} elements exceeds cap {cap}")


class NotAHomomorphism(MonoidIdealsError):
    def __init__(self, detail: str, witness: Tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(f"NotAHomomorphism: {detail}")


# Cálculo de ideais

class IdealError(MonoidIdealsError):
    """Erro em operações sobre ideais"""


class NotAnIdeal(IdealError):
    def __init__(self, element: int, multiplier: int):
        self.witness = (element, multiplier)
        super().__init__(
            f"NotAnIdeal: {element}*{multiplier} escapes the member set"
        )


class EmptyGeneratorSet(IdealError):
    def __init__(self):
        super().__init__("EmptyGeneratorSet: an ideal needs at least one generator")


class EmptyDivisorSet(IdealError):
    def __init__(self):
        super().__init__("EmptyDivisorSet: colon ideal needs a nonempty divisor set")


class MonoidMismatch(IdealError):
    def __init__(self, operation: str):
        super().__init__(f"MonoidMismatch: operands of {operation} live in different monoids")


class NotProper(IdealError):
    def __init__(self):
        super().__init__("NotProper: the ideal must be proper")


class ElementInIdeal(IdealError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"ElementInIdeal: {element} already belongs to the ideal")


class NoProperIdeal(IdealError):
    def __init__(self):
        super().__init__("NoProperIdeal: the trivial monoid has no proper ideal")


class LatticeTooLarge(IdealError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"LatticeTooLarge: more than {cap} ideals")


# Morfismos

class MorphismError(MonoidIdealsError):
    """Erro em contração/extensão ao longo de homomorfismos"""


class TargetMismatch(MorphismError):
    def __init__(self):
        super().__init__("TargetMismatch: ideal does not live in the target monoid")


class SourceMismatch(MorphismError):
    def __init__(self):
        super().__init__("SourceMismatch: ideal does not live in the source monoid")


class NotSurjective(MorphismError):
    def __init__(self, missing: int):
        self.missing = missing
        super().__init__(f"NotSurjective: target element {missing} has no preimage")


class EmptyContraction(MorphismError):
    def __init__(self):
        super().__init__("EmptyContraction: the preimage is empty, so it is not an ideal")


# Localização

class LocalizationError(MonoidIdealsError):
    """Erro na construção ou verificação de localizações"""


class NotMultiplicativelyClosed(LocalizationError):
    def __init__(self, detail: str, witness: Tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(f"NotMultiplicativelyClosed: {detail}")


class ZeroInS(LocalizationError):
    def __init__(self):
        super().__init__("ZeroInS: the correspondence results require 0 not in S")


class BaseMismatch(LocalizationError):
    def __init__(self, what: str = "ideal"):
        super().__init__(f"BaseMismatch: {what} does not live in the base monoid")


class QuotientMismatch(LocalizationError):
    def __init__(self):
        super().__init__("QuotientMismatch: ideal does not live in the localized monoid")


# Busca e formatos

class SearchBudgetExceeded(MonoidIdealsError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"SearchBudgetExceeded: more than {budget} partial antichains")


class CayleySyntaxError(MonoidIdealsError):
    def __init__(self, message: str, line: int, column: Optional[int] = None, source: str = "<string>"):
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}:{line}" if column is None else f"{source}:{line}:{column}"
        super().__init__(f"SyntaxError at {where}: {message}")
