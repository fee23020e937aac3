"""
Configuração de uma execução da CLI
"""
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from src.monoid_ideals.config.settings import settings


class RunConfig(BaseModel):
    """Parâmetros validados de uma execução (limites, formato, semente)"""
    command: str
    inputs: List[Path] = Field(default_factory=list)
    corpus: Optional[Path] = None
    homs: List[Path] = Field(default_factory=list)

    max_elements: int = Field(default=settings.MAX_ELEMENTS, gt=0)
    max_ideals: int = Field(default=settings.MAX_IDEALS, gt=0)
    antichain_budget: int = Field(default=settings.ANTICHAIN_BUDGET, gt=0)

    output_format: Literal["table", "json"] = "table"
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0)
    theorem: Optional[str] = None
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = settings.LOG_LEVEL
