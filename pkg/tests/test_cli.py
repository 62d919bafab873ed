import json
import os
import subprocess
import sys

BASE = [sys.executable, "-m", "recipmono.cli"]


def run(*args: str, env: dict | None = None) -> subprocess.CompletedProcess:
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, env=full_env
    )


def test_factor_json_shape() -> None:
    res = run("factor", "99225")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["report"]["factors"] == [[3, 4], [5, 2], [7, 2]]
    man = doc["manifest"]
    assert man["subcommand"] == "factor"
    assert man["parameters"]["n"] == 99225
    assert set(man) >= {"subcommand", "parameters", "input_digest", "version", "seed"}
    assert "wall_time_s" not in man


def test_timing_flag_adds_wall_time() -> None:
    res = run("--timing", "factor", "12")
    assert "wall_time_s" in json.loads(res.stdout)["manifest"]


def test_repeated_runs_byte_identical() -> None:
    a = run("family", "thm13", "--pmax", "10")
    b = run("family", "thm13", "--pmax", "10")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_seed_env_lands_in_manifest() -> None:
    res = run("factor", "6", env={"RECIPMONO_SEED": "pinned"})
    assert json.loads(res.stdout)["manifest"]["seed"] == "pinned"


def test_domain_error_exit_one() -> None:
    res = run("monogenic", "x^2")
    assert res.returncode == 1
    assert res.stdout == ""
    err = json.loads(res.stderr)
    assert err["error"]["type"] == "DomainError"
    assert "discriminant" in err["error"]["message"]
    assert err["manifest"]["subcommand"] == "monogenic"


def test_malformed_poly_exit_one() -> None:
    res = run("disc", "x**2+))")
    assert res.returncode == 1
    assert "malformed" in json.loads(res.stderr)["error"]["message"]


def test_usage_error_exit_two() -> None:
    assert run("frobnicate", "1").returncode == 2
    assert run("factor").returncode == 2


def test_round_trip_through_cli() -> None:
    out = run("f2g", "x^10+7x^8+16x^6+2x^5+16x^4+7x^2+1")
    g = json.loads(out.stdout)["report"]["g"]["text"]
    back = run("g2f", g)
    f = json.loads(back.stdout)["report"]["f"]["text"]
    assert f == "x^10+7x^8+16x^6+2x^5+16x^4+7x^2+1"


def test_index_test_and_ideal_square() -> None:
    res = run("index-test", "x^10+7x^8+16x^6+2x^5+16x^4+7x^2+1", "-p", "5")
    assert json.loads(res.stdout)["report"]["result"] == "DividesIndex"
    res = run(
        "ideal-square", "x^10+7x^8+16x^6+2x^5+16x^4+7x^2+1", "-p", "5", "--h", "x-1"
    )
    doc = json.loads(res.stdout)["report"]
    assert doc["member"] is True
    assert "witness" in doc


def test_family_jones_range_csv() -> None:
    res = run("family", "jones", "--q", "5", "--a", "0", "--r", "2", "--t", "-1..1")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0].startswith("# manifest: ")
    assert lines[1] == "q,a,r,t,F,g,disc_F,holds"
    assert len(lines) == 5
    assert all(line.split(",")[-1] == "True" for line in lines[2:])


def test_family_csv_to_json_override() -> None:
    res = run("--format", "json", "family", "jones", "--q", "3", "--a", "1", "--t", "2")
    doc = json.loads(res.stdout)
    rows = doc["report"]["rows"]
    assert len(rows) == 1
    assert rows[0]["holds"] is True


def test_galois5_cli() -> None:
    res = run("galois5", "x^5-x-1")
    doc = json.loads(res.stdout)["report"]
    assert doc["group"] == "S5"
    res = run("galois5", "x^5+20x+16")
    assert json.loads(res.stdout)["report"]["group"] == "A5"


def test_count_reports_match_across_jobs() -> None:
    a = run("count", "lf", "--N", "60", "--jobs", "1")
    b = run("count", "lf", "--N", "60", "--jobs", "2")
    assert json.loads(a.stdout)["report"] == json.loads(b.stdout)["report"]


def test_density_poly_from_file(tmp_path) -> None:
    p = tmp_path / "driver.txt"
    p.write_text("32x^3+188x^2+84x-49\n")
    res = run("density", "--poly", str(p), "--B", "10")
    doc = json.loads(res.stdout)["report"]
    assert doc["rho_values"]["2"] == 0
    assert doc["obstruction_primes"] == []
    inline = run("density", "--poly", "32x^3+188x^2+84x-49", "--B", "10")
    assert json.loads(inline.stdout)["report"] == doc


def test_sufficient_cli() -> None:
    res = run("sufficient", "x^4+x^3+201x^2+x+1")
    doc = json.loads(res.stdout)["report"]
    assert doc["verdict"] == "MonogenicProven"
    assert doc["boundary_product"] == 41205
