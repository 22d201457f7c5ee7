# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
import json

import pytest
from click.testing import CliRunner

from dlp_engine import scenarios
from dlp_engine.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, RunConfig, cli, split_alphabet
from dlp_engine.modelset import SemanticsId
from dlp_engine.parser import ParseError, parse_dlp
from dlp_engine.updates.transformations import exptwo
from dlp_engine.utils import InvalidLimitError


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestRunConfig:
    def test_unknown_command(self):
        with pytest.raises(ValueError):
            RunConfig('solve', SemanticsId.ERD)

    def test_limit(self):
        with pytest.raises(InvalidLimitError):
            RunConfig('models', SemanticsId.ERD, enumeration_limit=0)

    def test_alphabet(self):
        assert RunConfig('models', SemanticsId.ERD).alphabet is None
        cfg = RunConfig('models', SemanticsId.ERD, alphabet_extras=split_alphabet('a, b,,c'))
        assert cfg.alphabet_extras == ('a', 'b', 'c')
        assert len(cfg.alphabet.atoms) == 3

    def test_read_dlp(self):
        cfg = RunConfig('models', SemanticsId.ERD, sources=(('a.lp', 'p.\n#update.\nq.'), ('b.lp', 'r.')))
        assert len(cfg.read_dlp()) == 3

    def test_parse_error_names_the_file(self):
        cfg = RunConfig('models', SemanticsId.ERD, sources=(('broken.lp', 'p :- .'),))
        with pytest.raises(ParseError, match='broken.lp'):
            cfg.read_dlp()


class TestModels:
    def test_stdin(self, runner):
        result = runner.invoke(cli, ['models', '--semantics', 'erd'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_OK
        assert result.output.strip() == '{-p}'

    def test_no_model(self, runner):
        result = runner.invoke(cli, ['models', '-s', 'rd+exptwo'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_NEGATIVE
        assert result.output.strip() == ''

    def test_stratified(self, runner):
        result = runner.invoke(cli, ['models'], input=scenarios.STRATIFIED)
        assert result.exit_code == EXIT_OK
        assert result.output.strip() == '{-p, q, -r, s}'

    def test_json(self, runner):
        result = runner.invoke(cli, ['models', '--json'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload == dict(semantics='erd', models=[['-p']], count=1)

    def test_components_from_files(self, runner, tmp_path):
        first = write(tmp_path, 'railway.lp', scenarios.RAILWAY)
        second = write(tmp_path, 'train.lp', 'train.\n')
        result = runner.invoke(cli, ['models', first, second])
        assert result.exit_code == EXIT_OK
        assert result.output.strip() == '{train, wait}'

    def test_alphabet(self, runner):
        result = runner.invoke(cli, ['models', '-s', 'ws-dlp', '--alphabet', 'q'], input='p.\n')
        assert result.exit_code == EXIT_OK
        assert result.output.strip() == '{p}'

    @pytest.mark.parametrize('args, text', [(['models'], 'p :- .'),
                                            (['models', '-s', 'rd'], scenarios.FAULTY_SENSOR),
                                            (['models', '--limit', '0'], 'p.'),
                                            (['models', '--limit', '1'], 'p.\nq.')])
    def test_errors(self, runner, args, text):
        result = runner.invoke(cli, args, input=text)
        assert result.exit_code == EXIT_ERROR
        assert 'Error' in result.output

    def test_invalid_utf8_file(self, runner, tmp_path):
        path = tmp_path / 'binary.lp'
        path.write_bytes(b'q :- \xff.')
        result = runner.invoke(cli, ['models', str(path)])
        assert result.exit_code == EXIT_ERROR
        assert 'Error' in result.output
        assert 'binary.lp' in result.output
        assert 'UTF-8' in result.output

    def test_unknown_semantics(self, runner):
        result = runner.invoke(cli, ['models', '-s', 'foo'], input='p.')
        assert result.exit_code != EXIT_OK


class TestCheck:
    def test_rejected(self, runner):
        result = runner.invoke(cli, ['check', '{night, stars}', '-s', 'rd'], input=scenarios.IRRELEVANT_UPDATE)
        assert result.exit_code == EXIT_NEGATIVE
        assert 'rejected:' in result.output
        assert 'model: no' in result.output

    def test_accepted(self, runner):
        result = runner.invoke(cli, ['check', '{day}', '-s', 'rd'], input=scenarios.IRRELEVANT_UPDATE)
        assert result.exit_code == EXIT_OK
        assert 'model: yes' in result.output

    def test_trace(self, runner):
        result = runner.invoke(cli, ['check', '{p}', '--trace'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_NEGATIVE
        assert 'T^0: {}' in result.output

    def test_json(self, runner):
        result = runner.invoke(cli, ['check', '{-p}', '--json'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.output)
        assert payload['model'] is True
        assert payload['candidate'] == ['-p']

    def test_inconsistent_candidate(self, runner):
        result = runner.invoke(cli, ['check', '{p, -p}'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_ERROR


class TestTransform:
    def test_exptwo(self, runner):
        result = runner.invoke(cli, ['transform', 'exptwo'], input=scenarios.FAULTY_SENSOR)
        assert result.exit_code == EXIT_OK
        assert parse_dlp(result.output) == exptwo(parse_dlp(scenarios.FAULTY_SENSOR))

    def test_expone_extra_atoms(self, runner):
        result = runner.invoke(cli, ['transform', 'expone', '--alphabet', 'p'], input='')
        assert result.exit_code == EXIT_OK
        assert result.output.strip() == 'not -p :- p.\nnot p :- -p.'


class TestProperties:
    def test_expected_failure(self, runner):
        result = runner.invoke(cli, ['properties', '-s', 'rd+expone', '--case', 'empty-update'])
        assert result.exit_code == EXIT_OK
        assert 'expected failure' in result.output

    def test_random(self, runner):
        result = runner.invoke(cli, ['properties', '--case', 'early-recovery', '--random', '20'])
        assert result.exit_code == EXIT_OK
        assert 'early-recovery' in result.output

    def test_json(self, runner):
        result = runner.invoke(cli, ['properties', '-s', 'ews', '--case', 'primacy', '--json'])
        assert result.exit_code == EXIT_OK
        [summary] = json.loads(result.output)
        assert summary['failed'] == 0

    def test_from_file(self, runner, tmp_path):
        path = write(tmp_path, 'sensor.lp', scenarios.FAULTY_SENSOR)
        result = runner.invoke(cli, ['properties', path, '--case', 'support'])
        assert result.exit_code == EXIT_OK
