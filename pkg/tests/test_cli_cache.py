import json

import pytest

from jacktop import cli, jackref, topdegree
from jacktop.cache import Cache
from jacktop.jackref import jack_powersum
from jacktop.topdegree import kl_top


@pytest.fixture(autouse=True)
def _reset_disk_cache():
    yield
    jackref.set_disk_cache(None)
    topdegree.set_disk_cache(None)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_kl_top_text(capsys):
    code, out = run_cli(capsys, "kl-top", "2", "--format", "text")
    assert code == 0
    assert out.strip() == "R3 + R2*g"


def test_kl_top_json(capsys):
    code, out = run_cli(capsys, "kl-top", "1")
    assert code == 0
    assert json.loads(out) == [{"gamma": 0, "mu": [2], "coeff": "1"}]


def test_budget_exit_code(capsys):
    code, _ = run_cli(capsys, "kl-top", "99")
    assert code == 2


def test_eval_examples(capsys):
    code, out = run_cli(capsys, "eval", "ch", "2", "2")
    assert code == 0 and json.loads(out) == {"1": "2"}
    code, out = run_cli(capsys, "eval", "R", "2", "3,1")
    assert code == 0 and json.loads(out) == {"0": "4"}
    code, out = run_cli(capsys, "eval", "ch", "3", "1")
    assert code == 0 and json.loads(out) == {}


def test_parse_error_exit_code(capsys):
    code, _ = run_cli(capsys, "eval", "ch", "2", "2,x")
    assert code == 1
    code, _ = run_cli(capsys, "eval", "ch", "2", "1,2")
    assert code == 1


def test_usage_exit_code(capsys):
    assert cli.main(["no-such-command"]) == 1


def test_verify_suite_exit(capsys):
    code, out = run_cli(capsys, "verify", "catalan", "5")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_census_output(capsys):
    code, out = run_cli(capsys, "census", "2")
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {"sigma1": "1,2", "sigma2": "2,1", "orbitSize": 1},
        {"sigma1": "2,1", "sigma2": "1,2", "orbitSize": 1},
        {"sigma1": "2,1", "sigma2": "2,1", "orbitSize": 1},
    ]


def test_cache_roundtrip(tmp_path):
    cache = Cache(str(tmp_path))
    value = jack_powersum((2, 1))
    cache.store_jack((2, 1), value)
    assert cache.load_jack((2, 1)) == value
    table = kl_top(3)
    cache.store_kl_top(3, table)
    assert cache.load_kl_top(3) == table
    assert cache.load_kl_top(4) is None


def test_cache_schema_versioning(tmp_path):
    cache = Cache(str(tmp_path))
    cache.store_kl_top(2, kl_top(2))
    path = tmp_path / "kltop_2.json"
    doc = json.loads(path.read_text())
    assert doc["schema"] == 1
    doc["schema"] = 0
    path.write_text(json.dumps(doc))
    assert cache.load_kl_top(2) is None


def test_warm_cache_identical_output(tmp_path, capsys):
    argv = ["--cache-dir", str(tmp_path), "kl-top", "3"]
    code1, out1 = run_cli(capsys, *argv)
    # force the memory caches away so the second run reads from disk
    topdegree._KL_TOP_CACHE.pop(3, None)
    code2, out2 = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert (tmp_path / "kltop_3.json").exists()


def test_jobs_do_not_change_output(capsys):
    from jacktop import maps
    maps._CENSUS_CACHE.clear()
    _, out1 = run_cli(capsys, "census", "3")
    maps._CENSUS_CACHE.clear()
    try:
        _, out2 = run_cli(capsys, "--jobs", "2", "census", "3")
    finally:
        maps.set_jobs(1)
        maps._CENSUS_CACHE.clear()
    assert out1 == out2
