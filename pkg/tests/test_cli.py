"""
Command line tests: argument handling, root data output and exit codes.
"""

import json
from unittest.mock import patch

import pytest

from chevcheck.algebra.field import field_make
from chevcheck.algebra.rootsystem import rootsystem_from_label
from chevcheck.cli import build_parser, main, parse_generators
from chevcheck.utils.constants import EXIT_FAIL, EXIT_PASS, EXIT_SKIPPED, EXIT_USAGE
from chevcheck.utils.errors import GeneratorSpecError
from tests.fixtures import create_failed_report, create_passing_report, create_skipped_report


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path, monkeypatch):
    """The error log is written to the working directory."""
    monkeypatch.chdir(tmp_path)


# =============================================================================
# Parser
# =============================================================================

@pytest.mark.unit
def test_parser_defaults():
    args = build_parser().parse_args(["verify"])

    assert args.suite == "g2-char2"
    assert args.scenarios is None
    assert args.jobs == 1
    assert not args.no_timing


@pytest.mark.unit
def test_parser_collects_repeated_options():
    args = build_parser().parse_args(["verify", "--scenario", "S1", "--scenario", "S5", "--field", "gf4"])

    assert args.scenarios == ["S1", "S5"]
    assert args.fields == ["gf4"]


@pytest.mark.unit
@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["verify", "--budget", "0"], ["verify", "--jobs", "x"], ["rootsys"]],
)
def test_usage_errors_exit_3(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)

    assert info.value.code == EXIT_USAGE
    assert "usage:" in capsys.readouterr().err


# =============================================================================
# Root data commands
# =============================================================================

@pytest.mark.unit
def test_rootsys_json_matches_golden(capsys, golden):
    assert main(["rootsys", "--type", "G2"]) == EXIT_PASS

    data = json.loads(capsys.readouterr().out)
    expected = golden("g2_rootsys.json")
    for key, value in expected.items():
        assert data[key] == value, key


@pytest.mark.unit
def test_rootsys_text(capsys):
    assert main(["rootsys", "--type", "g2", "--format", "text"]) == EXIT_PASS

    out = capsys.readouterr().out
    assert out.startswith("G2: 12 roots, highest 3a1+2a2")
    assert "3a1+a2" in out


@pytest.mark.unit
def test_rootsys_unknown_type(capsys):
    assert main(["rootsys", "--type", "H3"]) == EXIT_USAGE
    assert "failed" in capsys.readouterr().err


@pytest.mark.unit
def test_primes_single_type(capsys):
    assert main(["primes", "--type", "E8"]) == EXIT_PASS

    assert json.loads(capsys.readouterr().out) == {
        "type": "E8",
        "bad": [2, 3, 5],
        "not_very_good_extra": [],
    }


@pytest.mark.unit
def test_primes_table(capsys):
    assert main(["primes"]) == EXIT_PASS

    table = json.loads(capsys.readouterr().out)
    assert len(table) == 32
    assert table["A4"] == {"bad": [], "not_very_good_extra": [5]}
    assert table["G2"]["bad"] == [2, 3]


@pytest.mark.unit
def test_primes_text(capsys):
    assert main(["primes", "--type", "A2", "--format", "text"]) == EXIT_PASS

    assert "A2" in capsys.readouterr().out


@pytest.mark.unit
def test_constants(capsys):
    assert main(["constants", "--type", "G2"]) == EXIT_PASS

    dump = json.loads(capsys.readouterr().out)
    assert abs(dump["a1,a2"]) == 1
    assert abs(dump["a1,2a1+a2"]) == 3


# =============================================================================
# Closure
# =============================================================================

@pytest.mark.unit
def test_parse_generators_simple():
    rs = rootsystem_from_label("G2")

    gens = parse_generators("simple", rs, field_make(2))

    assert [g.label for g in gens] == ["x[a1](1)", "x[-a1](1)", "x[a2](1)", "x[-a2](1)"]


@pytest.mark.unit
def test_parse_generators_explicit():
    rs = rootsystem_from_label("G2")

    gens = parse_generators("x[1,0](1); h[1,0](2); s[3,2]", rs, field_make(2, 2))

    assert [g.label for g in gens] == ["x[a1](1)", "h1(2)", "s[3a1+2a2]"]


@pytest.mark.unit
@pytest.mark.parametrize("spec", ["", "y[1,0]", "x[1,0,0]", "x[1,0](4)", "h[1,0](0)", ";;"])
def test_parse_generators_rejects(spec):
    rs = rootsystem_from_label("G2")

    with pytest.raises(GeneratorSpecError):
        parse_generators(spec, rs, field_make(2, 2))


@pytest.mark.unit
def test_closure_of_h_over_gf4(capsys):
    code = main(["closure", "--field", "gf4", "--gens", "s[1,0]; h[1,0](2)"])

    assert code == EXIT_PASS
    out = capsys.readouterr().out
    assert "GF(4)" in out
    assert " 6 " in out


@pytest.mark.unit
def test_closure_dump(tmp_path):
    dump = tmp_path / "sl2.json"

    assert main(["closure", "--gens", "x[1,0](1);x[-1,0](1)", "--dump", str(dump)]) == EXIT_PASS

    data = json.loads(dump.read_text(encoding="utf-8"))
    assert data["order"] == 6
    assert data["field"] == "GF(2)"
    assert len(data["elements"]) == 6
    assert len(data["elements"][0]) == 14


@pytest.mark.unit
def test_closure_over_cap_exits_2(capsys):
    assert main(["closure", "--cap", "100"]) == EXIT_SKIPPED
    assert "--budget" in capsys.readouterr().err


@pytest.mark.unit
def test_closure_bad_generator_exits_3(capsys):
    assert main(["closure", "--gens", "x[2,2]"]) == EXIT_USAGE


@pytest.mark.unit
def test_closure_bad_field_exits_3():
    assert main(["closure", "--field", "gf6"]) == EXIT_USAGE


# =============================================================================
# Verify
# =============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "reports, code",
    [
        ([create_passing_report()], EXIT_PASS),
        ([create_passing_report(), create_skipped_report()], EXIT_SKIPPED),
        ([create_failed_report()], EXIT_FAIL),
    ],
)
def test_verify_exit_codes(reports, code, capsys):
    with patch("chevcheck.cli.run_suite", return_value=reports):
        assert main(["verify"]) == code

    out = capsys.readouterr().out
    assert "status" in out
    assert reports[-1].scenario_id in out


@pytest.mark.unit
def test_verify_builds_params():
    with patch("chevcheck.cli.run_suite", return_value=[]) as run:
        main(["verify", "--scenario", "S6", "--field", "gf4", "--budget", "99", "--tuple-length", "4", "--jobs", "2"])

    ids, params = run.call_args.args
    assert ids == ["S6"]
    assert params == {"budget": 99, "fields": [4], "tuple_length": 4}
    assert run.call_args.kwargs == {"jobs": 2}


@pytest.mark.unit
def test_verify_unknown_scenario_exits_3(capsys):
    assert main(["verify", "--scenario", "S42"]) == EXIT_USAGE
    assert "S10" in capsys.readouterr().err


@pytest.mark.unit
def test_verify_rejects_odd_characteristic():
    assert main(["verify", "--field", "gf9"]) == EXIT_USAGE


@pytest.mark.unit
def test_verify_json_and_out(tmp_path, capsys):
    out = tmp_path / "r.json"
    with patch("chevcheck.cli.run_suite", return_value=[create_passing_report()]):
        assert main(["verify", "--json", "--no-timing", "--out", str(out)]) == EXIT_PASS

    printed = json.loads(capsys.readouterr().out)
    written = json.loads(out.read_text(encoding="utf-8"))
    assert printed == written
    assert "elapsed_s" not in written[0]


@pytest.mark.integration
def test_verify_s1_end_to_end(tmp_path):
    out = tmp_path / "s1.json"

    assert main(["verify", "--scenario", "S1", "--no-timing", "--out", str(out)]) == EXIT_PASS

    (report,) = json.loads(out.read_text(encoding="utf-8"))
    assert report["status"] == "pass"
    assert report["metrics"]["pairing_checks"] == 10
