import subprocess
import sys
from pathlib import Path

import pytest

from nilorder.cli import main
from nilorder.groupspec import parse_element, parse_spec
from nilorder.errors import MembershipError, SpecFormatError
from nilorder.harness.catalog import build

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "src" / "nilorder" / "data" / "hall_lambda.txt"


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "nilorder", *args], capture_output=True, text=True, cwd=ROOT
    )


def fields(stdout):
    return dict(line.split(": ", 1) for line in stdout.splitlines() if ": " in line)


def test_order_d4_ground_truth_pairs():
    out = run("order", "--group", "D4", "--a", "(1 2 3 4)", "--b", "(1 3)")
    assert out.returncode == 0, out.stderr
    f = fields(out.stdout)
    assert (f["o(a,b)"], f["o(ab)"], f["ratio"]) == ("4", "2", "1/2")
    assert f["class2.case"] == "R_EVEN_Q_EVEN_HALF"
    out = run("order", "--group", "D4", "--a", "(1 2 3 4)(1 3)", "--b", "(1 3)")
    # (1 2 3 4)(1 3) is not a product; cycles must be disjoint
    assert out.returncode == 4


def test_order_with_image_lists_and_indices():
    # s r = (1 4)(2 3), a reflection, in 1-based image-list form [4, 3, 2, 1]
    out = run("order", "--group", "D4", "--a", "[4,3,2,1]", "--b", "(1 3)")
    f = fields(out.stdout)
    assert (f["o(a,b)"], f["o(ab)"], f["ratio"]) == ("2", "4", "2/1")
    out = run("order", "--group", "D4", "--a", "@0", "--b", "@1")
    assert out.returncode == 0 and fields(out.stdout)["m"] == "1"


def test_order_spec_file_matrix_elements():
    out = run("order", "--group", "groups/heis3.grp", "--a", "1 1 0 0 1 0 0 0 1",
              "--b", "1 0 0 0 1 1 0 0 1")
    assert out.returncode == 0
    assert fields(out.stdout)["r"] == "3"


def test_hall_class_two():
    out = run("hall", "--class", "2", "--golden", str(GOLDEN))
    assert out.returncode == 0
    assert "f2 weight=2 0 1" in out.stdout
    f = fields(out.stdout)
    assert (f["A"], f["B"], f["C"]) == ("8", "16", "16")
    assert f["golden"].startswith("match")


def test_hall_golden_mismatch(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text(GOLDEN.read_text().replace("3 4 3 0 1 2", "3 4 3 0 1 3"))
    out = run("hall", "--class", "3", "--golden", str(bad))
    assert out.returncode == 1
    assert "MISMATCH at k = 4" in out.stdout


def test_hall_out_of_range():
    assert run("hall", "--class", "7").returncode == 2


def test_catalog_lists_entries():
    out = run("catalog")
    assert out.returncode == 0
    assert "D4\t8\t2\texhaustive" in out.stdout
    assert "S4\t24\t-" in out.stdout


def test_verify_single_group_and_formats(tmp_path):
    out = run("verify", "--group", "D4", "--group", "groups/ut4_2.grp")
    assert out.returncode == 0
    assert "status: PASS" in out.stdout
    assert "ratios: 1/2:16 1/1:40 2/1:8" in out.stdout
    dest = tmp_path / "r.tsv"
    out = run("verify", "--group", "heis3", "--format", "tsv", "--output", str(dest))
    assert out.returncode == 0 and out.stdout == ""
    assert dest.read_text().startswith("group\torder")


def test_exit_codes():
    assert run("order", "--group", "nope", "--a", "e", "--b", "e").returncode == 3
    assert run("order", "--group", "D4", "--a", "(1 2)", "--b", "e").returncode == 4
    assert run("order", "--group", "D4", "--a", "(1 9)", "--b", "e").returncode == 4
    assert run("verify", "--group", "heis27", "--cap", "100").returncode == 5
    assert run("verify", "--group", "S4", "--checks", "class2-ratio").returncode == 2
    assert run("verify").returncode == 2
    assert run("verify", "--group", "D4", "--workers", "0").returncode == 2
    assert run("bogus").returncode == 2
    err = run("order", "--group", "nope", "--a", "e", "--b", "e").stderr
    assert len(err.strip().splitlines()) == 1


def test_verify_all_filters_inapplicable_checks():
    out = run("verify", "--all", "--checks", "weakbound")
    assert out.returncode == 0
    groups = [l for l in out.stdout.splitlines() if l.startswith("[group")]
    assert groups == ["[group z4xz6]", "[group z4xz8]", "[group z6xz9]", "[group z5xz10]"]


def test_main_in_process(capsys):
    assert main(["order", "--group", "D4", "--a", "(1 3)", "--b", "(2 4)"]) == 0
    assert "o(a,b): 2" in capsys.readouterr().out


def test_spec_parser_errors():
    with pytest.raises(SpecFormatError):
        parse_spec("kind: permutation\ndegree: 4\n")
    with pytest.raises(SpecFormatError):
        parse_spec("kind: lattice\ngenerator: (1 2)\n")
    with pytest.raises(SpecFormatError):
        parse_spec("kind: permutation\ngenerator: (1 2)\n")
    with pytest.raises(SpecFormatError):
        parse_spec("kind: permutation\ndegree: 3\ncolour: red\ngenerator: (1 2)\n")
    with pytest.raises(SpecFormatError):
        parse_spec("kind: unitriangular\ndimension: 2\nmodulus: 3\ngenerator: 1 1 1 1\n")
    G = parse_spec("# S3\nkind: permutation\ndegree: 3\ngenerator: (1 2 3)\ngenerator: [2,1,3]\n")
    assert G.order == 6 and G.nilpotency_class is None


def test_parse_element():
    G = build("D4")
    assert parse_element("e", G) == G.identity
    assert parse_element("(1 3)(2 4)", G) == parse_element("[3,4,1,2]", G)
    with pytest.raises(MembershipError):
        parse_element("(1 2)", G)
    with pytest.raises(SpecFormatError):
        parse_element("@99", G)
    with pytest.raises(SpecFormatError):
        parse_element("(1 2", G)
