import json
from pathlib import Path

import pytest

from holoembed.biortho.models import FamilyKind
from holoembed.biortho.operations import build_system
from holoembed.embedding.models import WeightFamily
from holoembed.embedding.operations import make_weights
from holoembed.space.models import KotheFamily
from holoembed.space.operations import make_kothe

ROOT = Path(__file__).resolve().parent.parent
DEMO_CONFIG = ROOT / 'demo' / 'demo.json'


@pytest.fixture
def rapid():
    """rapid_decrease on 3 grades, 16 coordinates"""
    return make_kothe(KotheFamily.RAPID_DECREASE, grades=3, window=16)


@pytest.fixture
def disc():
    return make_kothe(KotheFamily.DISC_TYPE, grades=2, window=16)


@pytest.fixture
def canonical(rapid):
    _, system = build_system(FamilyKind.CANONICAL, 7, 16, 9, rapid)
    return system


@pytest.fixture
def triangular_pair(rapid):
    """(family, system) for the triangular family, seed 7, stage 16"""
    return build_system(FamilyKind.TRIANGULAR, 7, 16, 9, rapid)


@pytest.fixture
def factorial_weights():
    return make_weights(WeightFamily.INVERSE_FACTORIAL, window=16)


@pytest.fixture
def demo_config():
    return str(DEMO_CONFIG)


@pytest.fixture
def demo_data():
    return json.loads(DEMO_CONFIG.read_text(encoding='utf-8'))


@pytest.fixture
def small_config(demo_data):
    """Demo config with smaller sample counts"""
    data = dict(demo_data)
    data['stage'] = 8
    data['space'] = {**data['space'], 'window': 8}
    data['verification'] = {
        **data['verification'],
        'samples': 30,
        'trials': 8,
        'reconstructions': 10,
        'polynomials': 10,
        'table_stages': [4, 8],
    }
    return data


@pytest.fixture
def write_json(tmp_path):
    def write(name: str, data) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)

    return write
