"""
Configurações gerais do motor de ideais
"""
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from src.monoid_ideals.errors import ConfigurationError


@dataclass
class EngineSettings:
    """Configurações do motor de ideais e da suíte de teoremas"""

    # Limites de tamanho
    MAX_ELEMENTS: int = 64            # cabe numa palavra de máquina
    MAX_IDEALS: int = 2 ** 20
    ANTICHAIN_BUDGET: int = 10 ** 6   # anticadeias parciais na busca de unicidade

    # Limites das varreduras exaustivas
    BRUTE_FORCE_MAX_ELEMENTS: int = 12
    HOM_SWEEP_MAX_ELEMENTS: int = 6
    LOCALIZATION_EXHAUSTIVE_MAX: int = 8
    LOCALIZATION_SAMPLE_SIZE: int = 16
    X_SYSTEM_MAX_ELEMENTS: int = 6

    # Relatórios
    REPORT_SCHEMA_VERSION: int = 1
    DEFAULT_SEED: int = 0

    # Paths
    CONFIG_DIR: Path = Path(__file__).parent
    CORPUS_CONFIG: Path = CONFIG_DIR / "corpus.yaml"

    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # Variável de ambiente que sobrescreve o orçamento de anticadeias
    BUDGET_ENV_VAR: str = "MONOID_IDEALS_BUDGET"

    def antichain_budget_from_env(self) -> int:
        """
        Orçamento de anticadeias, lido da variável de ambiente na hora da chamada

        Raises:
            ConfigurationError: valor não inteiro ou não positivo
        """
        raw = os.environ.get(self.BUDGET_ENV_VAR)
        if raw is None:
            return self.ANTICHAIN_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            raise ConfigurationError(
                f"{self.BUDGET_ENV_VAR} must be an integer, got {raw!r}"
            ) from None
        if budget <= 0:
            raise ConfigurationError(
                f"{self.BUDGET_ENV_VAR} must be positive, got {budget}"
            )
        return budget


settings = EngineSettings()
