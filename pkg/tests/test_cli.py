import json
from fractions import Fraction

import pytest

from holoembed.biortho.schemas import SystemSchema
from holoembed.contrib.exceptions import (
    EXIT_CONFIG_INVALID,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE,
)
from holoembed.contrib.rationals import ComplexRational
from holoembed.embedding.models import Domain, DomainKind
from holoembed.embedding.operations import embed, make_weights
from holoembed.embedding.schemas import CSV_HEADER, ImageSchema
from holoembed.main import cli_main
from holoembed.space.models import SparseVector
from holoembed.verification.schemas import CertificateReport


def test_verify_small_config(write_json, small_config, capsys):
    assert cli_main(['verify', '--config', write_json('run.json', small_config)]) == EXIT_OK
    report = CertificateReport.model_validate_json(capsys.readouterr().out)
    assert report.passed


def test_verify_writes_csv_table(write_json, small_config, capsys):
    assert cli_main(['verify', '--config', write_json('run.json', small_config), '--format', 'csv']) == EXIT_OK
    lines = capsys.readouterr().out.strip().split('\n')
    assert lines[0] == ','.join(CSV_HEADER)
    assert len(lines) == 1 + 2 * 3


def test_verify_writes_to_out(write_json, small_config, tmp_path, capsys):
    out = tmp_path / 'report.json'
    assert cli_main(['verify', '--config', write_json('run.json', small_config), '--out', str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ''
    assert CertificateReport.model_validate_json(out.read_text(encoding='utf-8')).stage == 8


@pytest.mark.slow
def test_verify_demo(demo_config, capsys):
    assert cli_main(['verify', '--config', demo_config]) == EXIT_OK
    first = capsys.readouterr().out
    assert cli_main(['verify', '--config', demo_config]) == EXIT_OK
    assert capsys.readouterr().out == first


def test_build_emits_system(demo_config, capsys):
    assert cli_main(['build', '--config', demo_config, '--seed', '3']) == EXIT_OK
    system = SystemSchema.model_validate_json(capsys.readouterr().out).to_system()
    assert system.stage == 16
    assert system.m_constants[3] == Fraction(1, 4)


def test_build_rejects_csv(demo_config, capsys):
    assert cli_main(['build', '--config', demo_config, '--format', 'csv']) == EXIT_USAGE
    assert '--format' in capsys.readouterr().err


def test_missing_config_is_a_usage_error(capsys):
    assert cli_main(['build']) == EXIT_USAGE
    assert '--config' in capsys.readouterr().err


def test_unreadable_config(tmp_path, capsys):
    assert cli_main(['verify', '--config', str(tmp_path / 'absent.json')]) == EXIT_CONFIG_INVALID
    assert 'ConfigError' in capsys.readouterr().err


def test_invalid_config_names_the_field(write_json, demo_data, capsys):
    demo_data['verification']['k_list'] = ['1', '0.5']
    assert cli_main(['verify', '--config', write_json('bad.json', demo_data)]) == EXIT_CONFIG_INVALID
    assert 'verification.k_list[1]' in capsys.readouterr().err


def test_stage_override_beyond_window(demo_config, capsys):
    assert cli_main(['build', '--config', demo_config, '--stage', '17']) == EXIT_USAGE
    assert '--stage' in capsys.readouterr().err


def test_argparse_errors_are_usage_errors(capsys):
    assert cli_main(['frobnicate']) == EXIT_USAGE
    assert cli_main(['build', '--stage', '0']) == EXIT_USAGE
    assert cli_main(['build', '--seed', 'seven']) == EXIT_USAGE


def test_unknown_log_level(demo_config, capsys):
    assert cli_main(['build', '--config', demo_config, '--log-level', 'chatty']) == EXIT_USAGE
    assert '--log-level' in capsys.readouterr().err


def test_version(capsys):
    assert cli_main(['--version']) == EXIT_OK
    assert capsys.readouterr().out.startswith('holoembed ')


def test_build_then_embed_matches_library(demo_config, tmp_path, write_json, capsys, canonical):
    system_path = tmp_path / 'system.json'
    assert cli_main(['build', '--config', demo_config, '--out', str(system_path)]) == EXIT_OK
    vector = write_json('x.json', {'entries': {'1': {'re': '1', 'im': '-1/2'}, '4': {'re': '3'}}})
    capsys.readouterr()

    assert cli_main(['embed', '--system', str(system_path), '--vector', vector]) == EXIT_OK
    image = ImageSchema.model_validate_json(capsys.readouterr().out).to_image()

    x = SparseVector({1: ComplexRational(1, Fraction(-1, 2)), 4: 3})
    assert image == embed(x, canonical, make_weights('inverse_factorial', window=16))


def test_embed_uses_config_weights(tmp_path, write_json, demo_data, capsys):
    demo_data['weights'] = {'family': 'gaussian', 'params': {'q': '1/2'}}
    demo_data['domain'] = {'disc': '3'}
    config = write_json('gaussian.json', demo_data)
    system_path = tmp_path / 'system.json'
    assert cli_main(['build', '--config', config, '--out', str(system_path)]) == EXIT_OK
    vector = write_json('x.json', {'entries': {'0': {'re': '1'}}})

    assert cli_main(['embed', '--system', str(system_path), '--vector', vector, '--config', config]) == EXIT_OK
    image = ImageSchema.model_validate_json(capsys.readouterr().out).to_image()
    assert image.domain == Domain(DomainKind.DISC, Fraction(3))
    assert image.weights.values[2] == Fraction(1, 16)


def test_embed_requires_its_inputs(capsys):
    assert cli_main(['embed', '--vector', 'x.json']) == EXIT_USAGE
    assert '--system' in capsys.readouterr().err


def test_eval_monomial(tmp_path, canonical, factorial_weights, capsys):
    image = embed(canonical.e_vectors[2] / factorial_weights.values[2], canonical, factorial_weights)
    path = tmp_path / 'image.json'
    path.write_text(ImageSchema.from_image(image).model_dump_json(), encoding='utf-8')

    assert cli_main(['eval', '--image', str(path), '--z', '1/2,0', '--k', '1']) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result['value'] == {'re': '1/4', 'im': '0/1'}
    assert result['value_decimal'] == ['0.25000000000000000', '0.0']
    assert result['stage'] == 16


def test_eval_outside_disc(tmp_path, canonical, factorial_weights, capsys):
    image = embed(SparseVector.delta(0), canonical, factorial_weights, Domain(DomainKind.DISC, Fraction(1)))
    path = tmp_path / 'image.json'
    path.write_text(ImageSchema.from_image(image).model_dump_json(), encoding='utf-8')

    assert cli_main(['eval', '--image', str(path), '--z', '2', '--k', '2']) == EXIT_DOMAIN_ERROR
    assert 'OutsideDomain' in capsys.readouterr().err


def test_eval_rejects_malformed_point(tmp_path, canonical, factorial_weights, capsys):
    path = tmp_path / 'image.json'
    image = embed(SparseVector.delta(0), canonical, factorial_weights)
    path.write_text(ImageSchema.from_image(image).model_dump_json(), encoding='utf-8')
    assert cli_main(['eval', '--image', str(path), '--z', '1,2,3', '--k', '1']) == EXIT_USAGE
    assert cli_main(['eval', '--image', str(path), '--z', '0.5', '--k', '1']) == EXIT_USAGE


def test_table_decreases_with_the_stage(capsys):
    args = ['table', '--weights', 'inverse_factorial', '--k', '1', '--stages', '4..12']
    assert cli_main(args) == EXIT_OK
    header, *rows = capsys.readouterr().out.strip().split('\n')
    assert header == ','.join(CSV_HEADER)
    assert [int(row.split(',')[1]) for row in rows] == list(range(4, 13))
    constants = [Fraction(row.split(',')[4].split(' ')[0]) for row in rows]
    assert all(a > b for a, b in zip(constants, constants[1:]))


def test_table_as_json(capsys):
    args = ['table', '--weights', 'gaussian', '--q', '1/2', '--k', '2', '--stages', '8', '--format', 'json']
    assert cli_main(args) == EXIT_OK
    (row,) = json.loads(capsys.readouterr().out)
    assert row['k'] == '2/1'
    assert row['stage'] == 8


def test_table_from_config(write_json, small_config, capsys):
    assert cli_main(['table', '--config', write_json('run.json', small_config)]) == EXIT_OK
    assert len(capsys.readouterr().out.strip().split('\n')) == 1 + 3 * 2


@pytest.mark.parametrize(
    'args',
    [
        ['table'],
        ['table', '--weights', 'gaussian', '--k', '1'],
        ['table', '--weights', 'inverse_factorial', '--stages', '4..x'],
        ['table', '--weights', 'inverse_factorial', '--stages', '0,4'],
        ['table', '--weights', 'inverse_factorial', '--k', '1/0'],
    ],
)
def test_table_usage_errors(args):
    assert cli_main(args) == EXIT_USAGE


def test_table_uncertified_radius(capsys):
    args = ['table', '--weights', 'inverse_factorial', '--k', '9', '--stages', '4']
    assert cli_main(args) == EXIT_DOMAIN_ERROR
    assert 'CertificationUnavailable' in capsys.readouterr().err


def test_eval_rejects_image_shorter_than_its_stage(tmp_path, canonical, factorial_weights, capsys):
    image = embed(SparseVector.delta(0), canonical, factorial_weights)
    data = ImageSchema.from_image(image).model_dump(mode='json')
    data['coefficients'] = data['coefficients'][:2]
    path = tmp_path / 'image.json'
    path.write_text(json.dumps(data), encoding='utf-8')

    assert cli_main(['eval', '--image', str(path), '--z', '1/2', '--k', '1']) == EXIT_CONFIG_INVALID
    assert 'coefficients' in capsys.readouterr().err
