import json

import pytest

from matchloci.cli import main
from matchloci.serialize import qpoly_from_dict, schur_series_from_dict
from matchloci.formulas import grfrob_matchings, hilb_matchings


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_hilb_text(capsys):
    code, out = run(capsys, "hilb", "--locus", "matchings", "--n", "4")
    assert code == 0
    assert out.strip() == "1,6,3"


def test_hilb_zero(capsys):
    code, out = run(capsys, "hilb", "--locus", "matchings", "--n", "0")
    assert code == 0
    assert out.strip() == "1"


def test_hilb_csv_and_json(capsys, tmp_path):
    code, out = run(capsys, "hilb", "--locus", "matchings", "--n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[:2] == ["degree,dimension", "0,1"]
    path = tmp_path / "h.json"
    code, _ = run(
        capsys, "hilb", "--locus", "matchings", "--n", "4", "--format", "json",
        "--out", str(path),
    )
    assert code == 0
    with open(path, encoding="utf-8") as fh:
        assert qpoly_from_dict(json.load(fh)) == hilb_matchings(4)


def test_grfrob_text_pins_final_grade(capsys):
    code, out = run(capsys, "grfrob", "--locus", "matchings", "--n", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q^0: s[6]"
    assert lines[2] == "q^2: s[6] + s[5,1] + 2*s[4,2] + s[3,2,1] + s[2,2,2]"
    assert lines[3] == "q^3: s[6] + s[4,2] + s[2,2,2]"
    assert len(lines) == 4


def test_grfrob_json_round_trip(capsys):
    code, out = run(
        capsys, "grfrob", "--locus", "matchings", "--n", "5", "--format", "json"
    )
    assert code == 0
    assert schur_series_from_dict(json.loads(out)) == grfrob_matchings(5)


def test_grfrob_fixed_locus(capsys):
    code, out = run(capsys, "grfrob", "--locus", "fixed", "--n", "4", "--a", "4")
    assert code == 0
    assert out.strip() == "q^0: s[4]"


def test_verify_pass(capsys):
    for argv in (
        ["verify", "--locus", "pm", "--n", "4"],
        ["verify", "--locus", "fixed", "--n", "5", "--a", "1"],
        ["verify", "--locus", "matchings", "--n", "2"],
    ):
        code, out = run(capsys, *argv)
        assert code == 0
        assert "PASS" in out


def test_usage_errors_exit_2(capsys):
    assert main(["grfrob", "--locus", "fixed", "--n", "4"]) == 2
    capsys.readouterr()
    assert main(["grfrob", "--locus", "nowhere", "--n", "4"]) == 2
    capsys.readouterr()
    assert main(["hilb", "--locus", "pm", "--n", "5"]) == 2
    capsys.readouterr()


def test_resource_errors_exit_3(capsys):
    assert main(["verify", "--locus", "matchings", "--n", "9"]) == 3
    capsys.readouterr()


def test_identities_report(capsys):
    code, out = run(capsys, "identities", "--max-n", "6")
    assert code == 0
    assert "paired truncation n=6: PASS" in out
    assert out.strip().endswith("PASS")


def test_identities_threads_match_serial(capsys):
    _, serial = run(capsys, "identities", "--max-n", "5")
    _, threaded = run(capsys, "identities", "--max-n", "5", "--threads", "4")
    assert serial == threaded


def test_logconcave_hilbert_mode(capsys):
    code, out = run(capsys, "logconcave", "--locus", "matchings", "--max-n", "8")
    assert code == 0
    assert "matchings n=6 [hilbert]: PASS" in out


def test_logconcave_equivariant_mode(capsys):
    code, out = run(
        capsys, "logconcave", "--locus", "pm", "--max-n", "6", "--equivariant"
    )
    assert code == 0
    assert "pm n=6 [equivariant]: PASS" in out


def test_ideal_check_reports_table(capsys):
    code, out = run(capsys, "ideal-check", "--locus", "matchings", "--n", "4")
    assert code == 0
    assert "EQUAL through all computed degrees" in out
    code, out = run(capsys, "ideal-check", "--locus", "fixed", "--n", "3", "--a", "3")
    assert code == 0
    assert "UNEQUAL" in out


def test_ideal_check_search(capsys):
    code, out = run(capsys, "ideal-check", "--search", "--max-n", "3")
    assert code == 0
    assert "smallest strict instance" in out or "no strict instance" in out


def test_ideal_check_requires_locus_without_search(capsys):
    assert main(["ideal-check", "--n", "4"]) == 2
    capsys.readouterr()


def test_plot_writes_png(capsys, tmp_path):
    png = tmp_path / "hist.png"
    code, _ = run(
        capsys, "hilb", "--locus", "pm", "--n", "10", "--plot", str(png)
    )
    assert code == 0
    assert png.read_bytes()[:4] == b"\x89PNG"
