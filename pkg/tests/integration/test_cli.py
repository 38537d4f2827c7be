"""
Integration tests for the command-line front end.
Tests output formats and exit codes of every command.
"""
import importlib
import json
import pytest
import sys
from pathlib import Path
from unittest.mock import patch

# Add src to path
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from qeulerian.cli import main
from qeulerian.identities import DegreeResidual, VerificationReport

cli_main = importlib.import_module("qeulerian.cli.main")

WORD = "5 10 2 12 4 13 6 1 11 3 9 8 15 7 14"


class TestListAndTable:
    """Test the list and table commands."""

    def test_list(self, capsys):
        """list names identities and families."""
        assert main(['list']) == 0
        out = capsys.readouterr().out
        assert out.startswith("identities:\n")
        assert "  carlitz" in out
        assert "families:" in out
        assert "  euler-numbers" in out

    def test_table_text(self, capsys):
        """A_3 renders in canonical order."""
        assert main(['table', '--family', 'eulerian', '--n', '3']) == 0
        assert capsys.readouterr().out == "eulerian n=3: 1 + 4*x + x^2\n"

    def test_table_euler_numbers(self, capsys):
        """euler-numbers prints E_0 .. E_n on one line."""
        assert main(['table', '--family', 'euler-numbers', '--n', '5']) == 0
        assert capsys.readouterr().out == "euler-numbers n=5: 1,1,1,2,5,16\n"

    def test_table_gamma(self, capsys):
        """--gamma appends the gamma-vector."""
        assert main(['table', '--family', 'bivariate-eulerian', '--n', '4', '--gamma']) == 0
        out = capsys.readouterr().out
        assert "bivariate-eulerian n=4: x^3 + 11*x^2*y + 11*x*y^2 + y^3" in out
        assert "    gamma: 1, 8" in out

    def test_table_csv(self, capsys):
        """CSV rows carry one exponent column per variable."""
        assert main(['table', '--family', 'eulerian', '--n', '2', '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "family,n,x,y,u1,u2,u3,u4,alpha,beta,q,num,den"
        assert lines[1] == "eulerian,2,0,0,0,0,0,0,0,0,0,1,1"
        assert lines[2] == "eulerian,2,1,0,0,0,0,0,0,0,0,1,1"

    def test_table_json(self, capsys):
        """JSON tables hold one object per size."""
        assert main(['table', '--family', 'stirling-eulerian', '--n-max', '2', '--format', 'json']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert [json.loads(line)['n'] for line in lines] == [1, 2]
        assert json.loads(lines[1])['polynomial'] == "x*alpha + y*beta"

    def test_table_unknown_family(self, capsys):
        """Unknown families exit with a usage error."""
        assert main(['table', '--family', 'nope', '--n', '2']) == 2
        assert "UNKNOWN_FAMILY" in capsys.readouterr().err

    def test_table_out_file(self, tmp_path, capsys):
        """--out writes to a file instead of stdout."""
        target = tmp_path / "eulerian.txt"
        assert main(['table', '--family', 'eulerian', '--n', '3', '--out', str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert target.read_text(encoding='utf-8') == "eulerian n=3: 1 + 4*x + x^2\n"


class TestVerify:
    """Test the verify command."""

    def test_verify_passes(self, capsys):
        """A passing run exits 0 and summarizes."""
        code = main(['verify', '--id', 'carlitz', '--n', '2', '--samples', '2'])
        out = capsys.readouterr().out
        assert code == 0
        assert "PASS carlitz n=2 t^1" in out
        assert out.endswith("1/1 reports passed\n")

    def test_verify_text_echoes_seed(self, capsys):
        """Text output names the seed on every report line."""
        code = main(['verify', '--id', 'carlitz', '--n-max', '2', '--samples', '2', '--seed', '7'])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        assert lines[0] == "PASS carlitz n=1 t^0 seed=7"
        assert lines[1] == "PASS carlitz n=2 t^1 seed=7"

    def test_verify_json(self, capsys):
        """JSON output is one report per line, ordered by id then n."""
        code = main([
            'verify', '--id', 'secant', '--id', 'carlitz', '--n-max', '2',
            '--samples', '2', '--format', 'json',
        ])
        assert code == 0
        reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [(r['id'], r['n']) for r in reports] == [
            ('carlitz', 1), ('carlitz', 2), ('secant', 1), ('secant', 2),
        ]
        assert all(r['pass'] for r in reports)

    def test_verify_csv(self, capsys):
        """CSV output has a header and one row per report."""
        assert main(['verify', '--id', 'structure', '--n', '3', '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "id,n,pass,residual_degree,seed,elapsed_ms,failures"
        assert lines[1].startswith("structure,3,true,3,")

    def test_verify_failure_exit_code(self, capsys):
        """A failing report exits 1 and lists the failure on stderr."""
        failing = VerificationReport(
            id='carlitz', n=2, passed=False, residual_degree=1, seed=1,
            residuals=[DegreeResidual(label='egf', degree=1, value='x', sample=0)],
        )
        with patch.object(cli_main, "verify_identity", return_value=failing):
            code = main(['verify', '--id', 'carlitz', '--n', '2'])
        captured = capsys.readouterr()
        assert code == 1
        assert "FAIL carlitz n=2 egf sample 0: x" in captured.err
        assert "0/1 reports passed" in captured.out

    def test_unknown_identity(self, capsys):
        """Unknown ids exit 2."""
        assert main(['verify', '--id', 'no-such']) == 2
        assert "UNKNOWN_IDENTITY" in capsys.readouterr().err

    def test_t_order_too_small(self, capsys):
        """Asking for more degrees than the t-order allows exits 3."""
        assert main(['verify', '--id', 'carlitz2', '--n', '4', '--t-order', '2']) == 3
        assert "CONFIGURATION_ERROR" in capsys.readouterr().err

    def test_negative_size(self, capsys):
        """Invalid option values exit 2."""
        assert main(['verify', '--id', 'carlitz', '--n', '-1']) == 2
        assert "USAGE_ERROR" in capsys.readouterr().err

    def test_bad_format(self):
        """argparse rejects unknown formats with exit 2."""
        assert main(['verify', '--format', 'xml']) == 2

    def test_version(self, capsys):
        """--version exits 0."""
        assert main(['--version']) == 0
        assert "qeulerian" in capsys.readouterr().out


class TestInspect:
    """Test the inspect command."""

    def test_inspect_text(self, capsys):
        """inspect prints statistics and decompositions."""
        assert main(['inspect', '2164573']) == 0
        out = capsys.readouterr().out
        assert "permutation: 2164573" in out
        assert "basic: 21 | 645 | 73" in out
        assert "bi-basic: 2 | 1 | 64573" in out

    def test_inspect_psi(self, capsys):
        """--psi shows the image of psi_x."""
        assert main(['inspect', WORD, '--psi', '2']) == 0
        out = capsys.readouterr().out
        assert "psi_2: 5 10 1 6 13 4 12 2 11 3 9 8 15 7 14" in out
        assert "bi-basic: 5 10 | 2 12 4 13 6 | 1 | 11 3 | 9 8 15 7 | 14" in out

    def test_inspect_json(self, capsys):
        """JSON profiles carry the boundary quadruples."""
        assert main(['inspect', '213', '--format', 'json']) == 0
        profile = json.loads(capsys.readouterr().out)
        assert profile['quadruples']['(0,0)'] == {'valleys': 1, 'peaks': 2, 'da': 0, 'dd': 0}
        assert profile['statistics']['inv'] == 1

    def test_inspect_csv_refused(self, capsys):
        """Profiles have no CSV form."""
        assert main(['inspect', '213', '--format', 'csv']) == 3

    def test_inspect_bad_word(self, capsys):
        """Malformed words exit 2."""
        assert main(['inspect', '112']) == 2
        assert "PERMUTATION_ERROR" in capsys.readouterr().err

    @pytest.mark.parametrize("word", ["", "   "])
    def test_inspect_empty_word(self, word, capsys):
        """An empty word is refused like any malformed one."""
        assert main(['inspect', word]) == 2
        assert "PERMUTATION_ERROR" in capsys.readouterr().err


class TestErrorMapping:
    """Only option validation maps to the usage exit code."""

    def test_invalid_options_are_usage_errors(self, capsys):
        """pydantic validation failures exit 2."""
        assert main(['verify', '--id', 'carlitz', '--samples', '0']) == 2
        assert "USAGE_ERROR" in capsys.readouterr().err

    def test_internal_value_error_propagates(self):
        """A ValueError raised while running a command is not reported as a usage error."""
        with patch.object(cli_main, "verify_identity", side_effect=ValueError("boom")):
            with pytest.raises(ValueError, match="boom"):
                main(['verify', '--id', 'carlitz', '--n', '2'])
