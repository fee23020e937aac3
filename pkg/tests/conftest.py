"""
Fixtures compartilhadas para os testes
"""
from pathlib import Path

import pytest

from src.monoid_ideals.algebra.ideals import enumerate_ideals
from src.monoid_ideals.algebra.localization import localize, multiplicative_set
from src.monoid_ideals.algebra.monoid_core import chain, direct_product, zn_mul
from src.monoid_ideals.config.run_config import RunConfig

REPO_ROOT = Path(__file__).parent.parent


@pytest.fixture
def zn6():
    """Monoide multiplicativo de Z/6Z"""
    return zn_mul(6)


@pytest.fixture
def zn6_lattice(zn6):
    """Reticulado de ideais de Z6: {0}, {0,3}, {0,2,4}, {0,2,3,4}, M"""
    return enumerate_ideals(zn6)


@pytest.fixture
def zn3():
    return zn_mul(3)


@pytest.fixture
def chain3():
    """Cadeia {1, a, a^2, a^3 = 0}: identidade 0, zero 3"""
    return chain(3)


@pytest.fixture
def chain3_lattice(chain3):
    return enumerate_ideals(chain3)


@pytest.fixture
def zn4_x_c2():
    """Produto Z4 x C2 (12 elementos), reticulado em grade 3x3"""
    return direct_product(zn_mul(4), chain(2))


@pytest.fixture
def zn6_at_evens(zn6):
    """Localização de Z6 em S = {1, 2, 4} (isomorfa a Z3)"""
    return localize(zn6, multiplicative_set(zn6, [1, 2, 4]))


@pytest.fixture
def data_dir():
    return REPO_ROOT / "data"


@pytest.fixture
def golden_dir():
    return Path(__file__).parent / "golden"


@pytest.fixture
def run_config():
    """Configuração padrão da suíte de teoremas"""
    return RunConfig(command="check-theorems")


@pytest.fixture
def mock_settings(monkeypatch):
    """Mock das configurações para testes"""
    from src.monoid_ideals.config.settings import settings

    # Limites baixos para exercitar os caminhos de orçamento
    monkeypatch.setattr(settings, 'ANTICHAIN_BUDGET', 50)
    monkeypatch.setattr(settings, 'LOCALIZATION_EXHAUSTIVE_MAX', 8)
    monkeypatch.setattr(settings, 'HOM_SWEEP_MAX_ELEMENTS', 6)

    return settings
