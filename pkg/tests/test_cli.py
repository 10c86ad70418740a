import json

import pytest

from pnheights.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_coeff(capsys):
    assert run(capsys, "coeff", "--primes", "5,11,23", "--k", "71") == (EXIT_OK, "1\n", "")


@pytest.mark.parametrize("method", ["closed", "recursive", "oracle"])
def test_coeff_methods_agree(capsys, method):
    status, out, _ = run(capsys, "coeff", "--primes", "5,7,11,13", "--k", "233", "--method", method)
    assert status == EXIT_OK and out == "-2\n"


def test_coeff_json(capsys):
    status, out, _ = run(capsys, "--format", "json", "coeff", "--primes", "5,11,23", "--k", "71",
                         "--orientation", "ascending")
    assert status == EXIT_OK
    assert json.loads(out) == {
        "primes": ["5", "11", "23"], "k": "71", "value": "1", "method": "closed", "reduced": False,
    }


def test_composite_prime_is_usage_error(capsys):
    status, out, err = run(capsys, "coeff", "--primes", "5,9", "--k", "1")
    assert status == EXIT_USAGE
    assert out == ""
    assert "9 is composite" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "coeff", "--primes", "5,11")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "--help")[0] == EXIT_OK


def test_height(capsys):
    status, out, _ = run(capsys, "height", "--primes", "5,7,11,13", "--method", "region")
    assert status == EXIT_OK
    assert out == "height=2 witness=233 regions=1715\n"
    assert run(capsys, "height", "--primes", "2,3,5", "--method", "dense")[1] == "height=1 witness=0\n"


def test_height_tied_boundaries(capsys):
    region = run(capsys, "height", "--primes", "3,5,7")
    dense = run(capsys, "height", "--primes", "3,5,7", "--method", "dense")
    assert region[0] == dense[0] == EXIT_OK
    assert region[1].split()[:2] == dense[1].split()
    assert run(capsys, "table3", "--primes", "3,5,7")[0] == EXIT_USAGE


def test_height_regions_out(capsys, tmp_path):
    target = tmp_path / "regions.csv"
    status, _, _ = run(capsys, "height", "--primes", "5,11,23", "--regions-out", str(target))
    assert status == EXIT_OK
    assert len(target.read_text().splitlines()) == 65


def test_poly(capsys, tmp_path):
    status, out, _ = run(capsys, "poly", "--primes", "2,3,5")
    assert status == EXIT_OK
    assert out.splitlines()[:3] == ["index,coefficient", "0,1", "1,0"]

    target = tmp_path / "poly.json"
    assert run(capsys, "poly", "--primes", "2,3", "--format", "json", "--out", str(target))[0] == EXIT_OK
    assert json.loads(target.read_text())["coefficients"] == ["1", "-1", "1"]


def test_degree_cap_is_budget_error(capsys):
    status, _, err = run(capsys, "--degree-cap", "5", "poly", "--primes", "2,3,5")
    assert status == EXIT_BUDGET
    assert "budget exceeded" in err


def test_classify3(capsys):
    assert run(capsys, "classify3", "--primes", "5,11,23")[1] == "case=1 permutation=0,1,2\n"
    assert run(capsys, "classify3", "--primes", "5,11")[0] == EXIT_USAGE


def test_table3(capsys, tmp_path):
    status, out, _ = run(capsys, "table3", "--primes", "5,11,23")
    assert status == EXIT_OK
    assert out.splitlines()[1] == "0,0,0,1,0"

    target = tmp_path / "table.svg"
    assert run(capsys, "table3", "--primes", "5,11,23", "--format", "svg", "--out", str(target))[0] == EXIT_OK
    assert "<svg" in target.read_text()


def test_bounds(capsys):
    assert run(capsys, "bounds", "--n", "4")[1] == "upper=4 lower=2 maclaurin=8/3\n"
    status, out, _ = run(capsys, "--format", "json", "bounds", "--n", "3")
    assert json.loads(out)["upper"] == "3/2"


def test_verify_identities(capsys):
    status, out, _ = run(capsys, "verify", "--identities", "--primes", "2,3,5")
    assert status == EXIT_OK
    assert out.splitlines()[-1] == "verified=true"
    assert len(out.splitlines()) == 8 + 6 + 1


def test_construct_and_verify(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    assert run(capsys, "construct", "height1", "--n", "3", "--out", str(cert))[0] == EXIT_OK
    assert json.loads(cert.read_text())["primes"] == ["5", "13", "131"]

    status, out, _ = run(capsys, "verify", str(cert))
    assert status == EXIT_OK and out.endswith("verified=true\n")

    data = json.loads(cert.read_text())
    data["height"] = "3"
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(data))
    assert run(capsys, "verify", str(tampered))[0] == EXIT_FAILED


def test_construct_uses_cache(capsys, tmp_path):
    cache = tmp_path / "cache"
    first = run(capsys, "--cache-dir", str(cache), "construct", "height1", "--n", "3")
    assert first[0] == EXIT_OK
    assert len(list(cache.glob("*.json"))) == 1
    assert run(capsys, "--cache-dir", str(cache), "construct", "height1", "--n", "3")[1] == first[1]


def test_construct_amplify(capsys):
    status, out, _ = run(capsys, "construct", "amplify", "--primes", "3,5")
    assert status == EXIT_OK
    data = json.loads(out)
    assert data["kind"] == "amplified"
    assert data["source_primes"] == ["3", "5"]


def test_construct_needs_arguments(capsys):
    assert run(capsys, "construct", "height1")[0] == EXIT_USAGE
    assert run(capsys, "construct", "amplify")[0] == EXIT_USAGE


def test_ap_budget_exhausted(capsys):
    assert run(capsys, "--ap-budget", "1", "construct", "height1", "--n", "3")[0] == EXIT_BUDGET


@pytest.mark.slow
def test_construct_four_primes_and_verify(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    assert run(capsys, "construct", "height1", "--n", "4", "--out", str(cert))[0] == EXIT_OK
    assert run(capsys, "verify", str(cert))[0] == EXIT_OK


def test_bench(capsys):
    status, out, _ = run(capsys, "bench", "--primes", "3,5,7", "--samples", "20")
    assert status == EXIT_OK
    methods = [line.split()[0] for line in out.splitlines()]
    assert methods == ["method=closed", "method=recursive", "method=oracle"]
    assert all(line.endswith("agree=true") for line in out.splitlines())


def test_config_file_and_log_dir(capsys, tmp_path):
    config = tmp_path / "pn.yaml"
    config.write_text("oracle:\n  degree_cap: 5\n")
    assert run(capsys, "--config", str(config), "poly", "--primes", "2,3,5")[0] == EXIT_BUDGET

    logs = tmp_path / "logs"
    assert run(capsys, "--log-dir", str(logs), "--log-level", "DEBUG", "height", "--primes", "5,11,23")[0] == EXIT_OK
    assert any(logs.glob("*_structured.jsonl"))
