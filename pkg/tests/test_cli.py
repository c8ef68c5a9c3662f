import io
import json

import pytest

from mdlab.cli import (
    EXIT_CHECK_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    RunConfig,
    UsageError,
    main,
    parse_config,
    run,
)


def test_defaults():
    cfg = parse_config([])
    assert cfg.suites == ["qdilog", "integrals", "symbolic", "representation"]
    assert cfg.b == 0.83
    assert cfg.omega1 == 0.83
    assert cfg.omega2 == pytest.approx(1 / 0.83)
    assert cfg.seed == 42
    assert cfg.trials == 20
    assert cfg.gl_rank == 3
    assert cfg.workers == 1


def test_flag_overrides():
    cfg = parse_config(["--suite", "symbolic", "--max-N", "3", "--b", "0.5"])
    assert cfg.suites == ["symbolic"]
    assert cfg.max_N == 3
    assert cfg.b == 0.5


def test_repeatable_suite():
    cfg = parse_config(["--suite", "qdilog", "--suite", "integrals"])
    assert cfg.suites == ["qdilog", "integrals"]


def test_tol_override():
    cfg = parse_config(["--tol", "integrals=1e-8"])
    assert cfg.tolerances == {"integrals": 1e-8}
    with pytest.raises(UsageError):
        parse_config(["--tol", "integrals=-1"])
    with pytest.raises(UsageError):
        parse_config(["--tol", "nosuite=1e-8"])
    with pytest.raises(UsageError):
        parse_config(["--tol", "garbage"])


def test_config_file_and_precedence(tmp_path):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text(
        "# comment\n"
        "b = 0.7\n"
        "suites = qdilog, integrals\n"
        "trials = 5\n"
        "tol.integrals = 1e-7\n"
    )
    cfg = parse_config(["--config", str(cfg_file)])
    assert cfg.b == 0.7
    assert cfg.suites == ["qdilog", "integrals"]
    assert cfg.trials == 5
    assert cfg.tolerances["integrals"] == 1e-7
    # flags beat the file
    cfg = parse_config(["--config", str(cfg_file), "--b", "1.2", "--suite", "symbolic"])
    assert cfg.b == 1.2
    assert cfg.suites == ["symbolic"]


def test_bad_config_file(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("this is not key value\n")
    with pytest.raises(UsageError):
        parse_config(["--config", str(bad)])
    bad.write_text("unknown_key = 3\n")
    with pytest.raises(UsageError):
        parse_config(["--config", str(bad)])


def test_validation_errors():
    with pytest.raises(UsageError):
        parse_config(["--b", "-0.5"])
    with pytest.raises(UsageError):
        parse_config(["--trials", "0"])
    with pytest.raises(UsageError):
        parse_config(["--workers", "0"])


def test_usage_exit_codes(capsys):
    assert main(["--b", "-1"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        parse_config(["--no-such-flag"])
    assert exc.value.code == 2


def test_run_writes_report_and_exit_zero(tmp_path):
    cfg = RunConfig(
        suites=["qdilog"], b=0.9, report_path=str(tmp_path / "rep.json")
    )
    out = io.StringIO()
    assert run(cfg, out=out) == EXIT_OK
    payload = json.loads((tmp_path / "rep.json").read_text())
    assert payload["summary"]["failed"] == 0
    assert payload["summary"]["total"] == len(payload["checks"])
    assert payload["config"]["b"] == 0.9
    for check in payload["checks"]:
        assert {"identity_id", "params", "rel_error", "tolerance", "passed"} <= set(check)
    assert "[PASS]" in out.getvalue()


def test_run_failure_exit(tmp_path):
    cfg = RunConfig(
        suites=["qdilog"],
        tolerances={"qdilog": 1e-16},
        report_path=str(tmp_path / "rep.json"),
    )
    assert run(cfg, out=io.StringIO()) == EXIT_CHECK_FAILURE
    payload = json.loads((tmp_path / "rep.json").read_text())
    assert payload["summary"]["failed"] > 0


def test_report_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("MDLAB_REPORT_DIR", str(tmp_path / "sub"))
    cfg = RunConfig(suites=["representation"], gl_rank=2, trials=2)
    assert run(cfg, out=io.StringIO()) == EXIT_OK
    assert (tmp_path / "sub" / "mdlab_report.json").exists()


def _numeric_part(payload):
    return [
        (c["identity_id"], c["rel_error"], c["passed"]) for c in payload["checks"]
    ]


def test_determinism_across_runs(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        cfg = RunConfig(
            suites=["representation"], gl_rank=2, trials=3, seed=7,
            report_path=str(path),
        )
        assert run(cfg, out=io.StringIO()) == EXIT_OK
    a = json.loads(paths[0].read_text())
    b = json.loads(paths[1].read_text())
    assert _numeric_part(a) == _numeric_part(b)


def test_workers_do_not_change_results(tmp_path):
    results = []
    for workers in (1, 2):
        path = tmp_path / f"w{workers}.json"
        cfg = RunConfig(
            suites=["qdilog", "representation"], gl_rank=2, trials=2,
            workers=workers, report_path=str(path),
        )
        assert run(cfg, out=io.StringIO()) == EXIT_OK
        results.append(_numeric_part(json.loads(path.read_text())))
    assert results[0] == results[1]
