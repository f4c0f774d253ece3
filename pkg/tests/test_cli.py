from pathlib import Path

import pytest

from sgbricks.cli import run


def invoke(capsys, *args):
    code = run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------- snapshots

def test_analyze_worked_example(capsys):
    code, out, err = invoke(capsys, "analyze", "10", "11", "13", "17", "19")
    assert code == 0 and err == ""
    assert out == (
        "S = <10, 11, 13, 17, 19>\n"
        "multiplicity: 10\n"
        "frobenius: 25\n"
        "n_count: 11\n"
        "symmetric: no\n"
        "apery set: 0 11 13 17 19 22 24 26 28 35\n"
    )


def test_analyze_reduces_generators(capsys):
    code, out, _ = invoke(capsys, "analyze", "4", "6", "9", "10")
    assert code == 0
    assert out.startswith("S = <4, 6, 9>\n")


def test_dual_worked_example(capsys):
    code, out, err = invoke(capsys, "dual", "10", "11", "13", "17", "19",
                            "--", "2", "5")
    assert code == 0 and err == ""
    assert out == (
        "S = <10, 11, 13, 17, 19>\n"
        "I = (2, 5)\n"
        "S - I = (8, 15, 17, 22, 24)\n"
        "I + (S - I) = (10, 13, 17, 19, 22)\n"
        "mu(I) = 2, mu(S - I) = 5, mu(I + (S - I)) = 5\n"
    )


def test_brick_perfect_example(capsys):
    code, out, err = invoke(capsys, "brick", "14", "15", "20", "21", "--", "0", "1")
    assert code == 0 and err == ""
    assert out == (
        "S = <14, 15, 20, 21>\n"
        "I = (0, 1)\n"
        "S - I = (14, 20)\n"
        "I + (S - I) = (14, 15, 20, 21)\n"
        "dimensions: 2 x 2\n"
        "brick: yes\n"
        "perfect: yes\n"
    )


def test_brick_imperfect_example(capsys):
    code, out, _ = invoke(capsys, "brick", "10", "14", "15", "21", "--", "0", "1")
    assert code == 0
    assert "brick: yes\n" in out
    assert "perfect: no\n" in out


def test_classify_balanced_example(capsys):
    code, out, err = invoke(capsys, "classify", "12", "15", "25", "28")
    assert code == 0 and err == ""
    assert out == (
        "quadruple: <12, 15, 25, 28>\n"
        "classification: balanced\n"
        "gcd(a1, a4) = 4, gcd(a2, a3) = 5\n"
        "quotients: q1 = 3, q2 = 3, q3 = 5, q4 = 7\n"
        "common sum = 40, common quotient = 2\n"
        "shift n = 3\n"
    )


def test_classify_unitary_example(capsys):
    code, out, _ = invoke(capsys, "classify", "14", "15", "20", "21")
    assert code == 0
    assert out == (
        "quadruple: <14, 15, 20, 21>\n"
        "classification: unitary\n"
        "gcd(a1, a4) = 7, gcd(a2, a3) = 5\n"
        "quotients: q1 = 2, q2 = 3, q3 = 4, q4 = 3\n"
        "common sum = 35, common quotient = 1\n"
        "shift n = 1\n"
        "frobenius of <14, 15, 20> = 81\n"
        "frobenius of <14, 15, 20, 21> = 67\n"
        "canonical ideal: (0, 1)\n"
        "predicted dual: (14, 20)\n"
    )


def test_classify_not_balanced(capsys):
    code, out, _ = invoke(capsys, "classify", "10", "14", "15", "21")
    assert code == 0
    assert out == (
        "quadruple: <10, 14, 15, 21>\n"
        "classification: not balanced\n"
        "reason: outer and inner pair sums differ\n"
    )


def test_family(capsys):
    code, out, _ = invoke(capsys, "family", "--z-max", "5")
    assert code == 0
    assert out == (
        "z = 3: <14, 15, 20, 21>  I = (0, 1)  dual = (14, 20)  perfect 2x2: yes\n"
        "z = 4: <18, 20, 25, 27>  I = (0, 2)  dual = (18, 25)  perfect 2x2: yes\n"
        "z = 5: <22, 25, 30, 33>  I = (0, 3)  dual = (22, 30)  perfect 2x2: yes\n"
    )


def test_family_skips_divisible(capsys):
    code, out, _ = invoke(capsys, "family", "--z-max", "8")
    assert code == 0
    assert "z = 7" not in out
    assert "z = 8" in out


def test_lift(capsys):
    code, out, _ = invoke(capsys, "lift", "10", "15", "18", "27", "--", "0", "2")
    assert code == 0
    assert out == (
        "S = <10, 15, 18, 27>\n"
        "I = (0, 2)\n"
        "lifted S = <18, 20, 25, 27>\n"
        "lifted I = (0, 2)\n"
        "dimensions: 2 x 2\n"
        "brick: yes\n"
        "perfect: yes\n"
    )


def test_search_line_format(capsys):
    code, out, err = invoke(capsys, "search", "--t-min", "4", "--t-max", "4",
                            "--gen-max", "20")
    assert code == 0
    assert out == ('{"s": [12, 15, 17, 18], "i": [0, 4], '
                   '"dual": [29, 30, 32, 35], "k": 2, "m": 4, '
                   '"perfect": false, "mult": 12, "frob": 55}\n')
    assert "bricks: 1 pairs, 1 distinct semigroups, 0 perfect" in err


def test_search_table_format(capsys):
    code, out, _ = invoke(capsys, "search", "--t-min", "4", "--t-max", "4",
                          "--gen-max", "20", "--format", "table")
    assert code == 0
    assert out == (
        "s_gens;i_gens;dual_gens;k;m;perfect;mult;frob\n"
        "12,15,17,18;0,4;29,30,32,35;2;4;false;12;55\n"
    )


def test_search_out_file(tmp_path: Path, capsys):
    target = tmp_path / "hits.jsonl"
    code, out, err = invoke(capsys, "search", "--t-min", "4", "--t-max", "4",
                            "--gen-max", "20", "--out", str(target))
    assert code == 0
    assert out == ""
    assert "bricks: 1 pairs" in err
    assert target.read_text().startswith('{"s": [12, 15, 17, 18]')


def test_search_workers_same_output(capsys):
    code, out1, _ = invoke(capsys, "search", "--t-min", "4", "--t-max", "4",
                           "--gen-max", "22")
    assert code == 0
    code, out2, _ = invoke(capsys, "search", "--t-min", "4", "--t-max", "4",
                           "--gen-max", "22", "--workers", "3")
    assert code == 0
    assert out1 == out2


def test_search_empty_space(capsys):
    code, out, err = invoke(capsys, "search", "--gen-max", "8")
    assert code == 0
    assert out == ""
    assert "bricks: 0 pairs, 0 distinct semigroups, 0 perfect" in err


# ------------------------------------------------------------- exit codes

def test_no_arguments(capsys):
    code, out, err = invoke(capsys)
    assert code == 2 and out == "" and err.startswith("usage:")


def test_help(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0 and out.startswith("usage:")


def test_unknown_command(capsys):
    code, _, err = invoke(capsys, "frobnicate")
    assert code == 2
    assert err.startswith("error: usage: unknown command")


def test_bad_integer(capsys):
    code, _, err = invoke(capsys, "analyze", "ten")
    assert code == 2
    assert "expected an integer" in err


def test_missing_separator(capsys):
    code, _, err = invoke(capsys, "dual", "10", "11", "13", "17", "19", "2", "5")
    assert code == 2
    assert "`--`" in err


def test_classify_arity_usage(capsys):
    code, _, err = invoke(capsys, "classify", "14", "15", "20")
    assert code == 2
    assert "four integers" in err


def test_domain_error_exit(capsys):
    code, _, err = invoke(capsys, "analyze", "10", "20")
    assert code == 3
    assert err == ("error: non-coprime: generators have gcd 10; "
                   "the complement would be infinite\n")


def test_lift_domain_error(capsys):
    code, _, err = invoke(capsys, "lift", "10", "11", "13", "17", "19",
                          "--", "2", "5")
    assert code == 3
    assert err.startswith("error: zero-not-generator:")


def test_io_error_exit(capsys):
    code, _, err = invoke(capsys, "search", "--gen-max", "10",
                          "--out", "/nonexistent-dir/x.txt")
    assert code == 4
    assert err.startswith("error: io:")


def test_search_requires_gen_max(capsys):
    code, _, err = invoke(capsys, "search", "--t-min", "4")
    assert code == 2
    assert "--gen-max" in err


def test_search_bad_config_is_domain_error(capsys):
    code, _, err = invoke(capsys, "search", "--gen-max", "10", "--t-min", "1")
    assert code == 3
    assert err.startswith("error: invalid-input:")
