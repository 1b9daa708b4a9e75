import json

import pytest

from app.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_no_command_prints_help(capsys):
    code = main([])

    assert code == EXIT_USAGE
    assert "usage" in capsys.readouterr().err


def test_unknown_command_is_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE


def test_enumerate(capsys):
    code, out = _run(capsys, "enumerate", "3")

    assert code == EXIT_OK
    assert json.loads(out) == ["((()))", "(()())", "(())()", "()(())", "()()()"]


def test_enumerate_csv_with_ranks(capsys):
    code, out = _run(capsys, "enumerate", "3", "--start", "3", "--csv")

    assert code == EXIT_OK
    assert out.splitlines() == ["rank,word", "3,()(())", "4,()()()"]


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["(()(()))((()))()", "--to", "perm"], "41327658"),
        (["(())()", "--to", "dyck"], "uuddud"),
        (["[[[]],[]]", "--from", "forest", "--to", "arches"], "(())()"),
        (["(())()", "--to", "forest"], [[[]], []]),
    ],
)
def test_convert(capsys, argv, expected):
    code, out = _run(capsys, "convert", *argv)

    assert code == EXIT_OK
    assert json.loads(out)["value"] == expected


def test_convert_rejects_231(capsys):
    assert main(["convert", "231", "--from", "perm", "--to", "arches"]) == EXIT_USAGE


def test_parse_error_is_usage_error(capsys):
    assert main(["contains", "(()", "()"]) == EXIT_USAGE


def test_contains(capsys):
    code, out = _run(capsys, "contains", "(())()", "()")
    data = json.loads(out)

    assert code == EXIT_OK
    assert data["contains"] is True
    assert data["leftmost"] == [1]


def test_gf_prints_decimal_strings(capsys):
    code, out = _run(capsys, "gf", "((()))", "--degree", "6")

    assert code == EXIT_OK
    assert json.loads(out) == ["1", "1", "2", "4", "8", "16", "32"]


def test_gf_brute_agrees(capsys):
    _, fast = _run(capsys, "gf", "()(()())", "--degree", "5")
    _, brute = _run(capsys, "gf", "()(()())", "--degree", "5", "--brute")

    assert json.loads(fast) == json.loads(brute) == ["1", "1", "2", "5", "13", "34"]


def test_key(capsys):
    code, out = _run(capsys, "key", "()()()")
    data = json.loads(out)

    assert code == EXIT_OK
    assert data["key"] == "(A 0 (B (A 1) (A 1) (A 1)))"
    assert data["singleton"] is True
    assert data["main"] is False


def test_census_uses_cache_dir(capsys, tmp_path):
    code, out = _run(capsys, "census", "6", "--cache", str(tmp_path))
    data = json.loads(out)

    assert code == EXIT_OK
    assert data["cohorts"] == "16"
    assert data["total"] == "132"
    assert (tmp_path / "census-6.jsonl").exists()


def test_census_with_series(capsys, tmp_path):
    code, out = _run(capsys, "census", "3", "--cache", str(tmp_path), "--gf", "4")
    rows = {row["rep"]: row["gf"] for row in json.loads(out)["classes"]}

    assert code == EXIT_OK
    assert rows["((()))"] == ["1", "1", "2", "4", "8"]
    assert len(rows) == 2


def test_census_csv(capsys, tmp_path):
    code, out = _run(capsys, "census", "3", "--no-cache", "--csv")

    assert code == EXIT_OK
    assert out.splitlines()[0] == "key,count,rep"
    assert len(out.splitlines()) == 3


def test_long_census_needs_flag(capsys):
    assert main(["census", "14", "--no-cache"]) == EXIT_USAGE


def test_cohort_series(capsys):
    code, out = _run(capsys, "cohort-series", "10")

    assert code == EXIT_OK
    assert json.loads(out)[1:] == ["1", "1", "2", "4", "8", "16", "32", "67", "142", "307"]


def test_singletons(capsys):
    code, out = _run(capsys, "singletons", "4")

    assert code == EXIT_OK
    assert json.loads(out) == {"1": "1", "2": "0", "3": "1", "4": "2"}


def test_verify_report_and_exit_code(capsys, tmp_path):
    code, out = _run(capsys, "verify", "strong", "5", "--cache", str(tmp_path))
    data = json.loads(out)

    assert code == EXIT_OK
    assert data["passed"] is True
    assert data["check"] == "strong"


def test_family(capsys):
    code, out = _run(capsys, "family", "5")

    assert code == EXIT_OK
    assert json.loads(out)["details"]["first_difference"] == 8


def test_bijection_verify_and_apply(capsys, tmp_path):
    target = tmp_path / "path.json"
    code, out = _run(
        capsys, "bijection", "(())", "()()", "--verify", "8", "--apply", "()()()", "--json-path", str(target)
    )
    data = json.loads(out)

    assert code == EXIT_OK
    assert data["report"]["passed"] is True
    assert data["image"] == "((()))"
    assert json.loads(target.read_text())["start"] == "(())"


def test_bijection_between_cohorts_fails(capsys):
    code, out = _run(capsys, "bijection", "()()()", "((()))")

    assert code == EXIT_FAILED
    assert json.loads(out)["path"] is None


def test_parser_defaults():
    args = build_parser().parse_args(["bijection", "(())", "()()", "--verify"])

    assert args.verify == -1
    assert args.apply is None
    assert args.any is False


def test_bijection_any_finds_full_rotation_paths(capsys):
    start, end = "(()()())((()()())(()()()()))", "((()()())(()()()))(()()()())"

    assert main(["bijection", start, end]) == EXIT_FAILED
    capsys.readouterr()

    code, out = _run(capsys, "bijection", start, end, "--any")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["bijective"] is False
    assert len(data["path"]["steps"]) == 1

    assert main(["bijection", start, end, "--any", "--verify"]) == EXIT_FAILED
