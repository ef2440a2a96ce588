"""Tests for the mg command line."""

import io
import json
from collections.abc import Callable
from pathlib import Path

import pytest
import yaml

from braid_reps import catalogue_names
from presentations import Presentation
from mg_toolkit.cli import Format, create_parser, porcelain_lines, run
from mg_toolkit.inputs import InputError, InputKind, load_input, parse_braid_file, sniff
from mg_toolkit.settings import SettingsError, load_settings

type WriteInput = Callable[[str, str], Path]

D1 = "circle 1: N-\n"
CHAIN = "gens: x1 x2 v1\nrel: x2^-1 v1^-1 x1 v1\n"


def mg(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rep_verify(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = mg(capsys, "rep", "verify", "--rep", "phiS", "--n", "4")
    assert code == 0
    assert out.startswith("ok relations=")
    assert "virtually_symmetric=true" in out


def test_rep_verify_porcelain(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = mg(
        capsys, "rep", "verify", "--rep", "phiM", "--n", "3", "--porcelain"
    )
    assert code == 0
    lines = out.splitlines()
    assert "representation=phiM" in lines
    assert "ok=true" in lines
    assert "virtually_symmetric=false" in lines


def test_bigelow(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = mg(capsys, "bigelow")
    assert code == 0
    assert out.splitlines() == [
        "b1 length=122 identity=true",
        "b2 length=44 identity=true",
    ]


def test_group_abelianization(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    code, out, _ = mg(capsys, "group", "--in", str(path), "--abelianization")
    assert (code, out) == (0, "free_rank=2 torsion=[]\n")


def test_group_of_diagram(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    code, out, _ = mg(capsys, "group", "--in", str(path))
    assert code == 0
    assert out.splitlines()[0] == "gens: x1 v1"


def test_group_of_braid_needs_rep(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("b.braid", "n=2\ns1\n")
    code, _, err = mg(capsys, "group", "--in", str(path))
    assert code == 1
    assert err == "error: Braid input needs --rep\n"
    code, out, _ = mg(capsys, "abelianization", "--in", str(path), "--rep", "phiS")
    assert code == 0
    assert out.startswith("free_rank=")


def test_homcount(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    code, out, _ = mg(capsys, "homcount", "--in", str(path), "--target", "s3")
    assert (code, out) == (0, "18\n")
    code, out, _ = mg(
        capsys,
        "homcount",
        "--in",
        str(path),
        "--target",
        "s3",
        "--no-simplify",
        "--json",
    )
    assert json.loads(out) == {"target": "s3", "count": 18}


def test_homcount_respects_settings(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    settings = write_input(
        "tight.toml",
        "[search]\nlimit = 1\nsimplify = false\njobs = 1\n"
        "[simplify]\nmax_length = 100\n"
        '[peripheral]\nquotients = ["s3"]\n',
    )
    code, _, err = mg(
        capsys,
        "homcount",
        "--in",
        str(path),
        "--target",
        "s3",
        "--settings",
        str(settings),
    )
    assert code == 1
    assert "exceeds the limit of 1" in err


def test_homcount_rejects_large_symmetric_groups(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    code, out, err = mg(capsys, "homcount", "--in", str(path), "--target", "s9")
    assert (code, out) == (1, "")
    assert err.startswith("error: ")
    assert "362880 elements" in err


def test_invariants_formats(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("nodes.gauss", "circle 1: N- N- N+\n")
    code, out, _ = mg(capsys, "invariants", "--in", str(path))
    assert (code, out) == (0, "nodes=3 sign_sum=-1 sign_product=1\n")
    _, out, _ = mg(capsys, "invariants", "--in", str(path), "--porcelain")
    assert out.splitlines() == ["nodes=3", "sign_sum=-1", "sign_product=1"]
    _, out, _ = mg(capsys, "invariants", "--in", str(path), "--json")
    assert json.loads(out) == {"nodes": 3, "sign_sum": -1, "sign_product": 1}
    _, out, _ = mg(capsys, "invariants", "--in", str(path), "--yaml")
    assert yaml.safe_load(out) == {"nodes": 3, "sign_sum": -1, "sign_product": 1}


def test_quiet_suppresses_table(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("nodes.gauss", "circle 1: N+\n")
    code, out, _ = mg(capsys, "invariants", "--in", str(path), "-q")
    assert (code, out) == (0, "")


def test_parse_reads_stdin(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    stdin = io.StringIO("# chord\n\ncircle 1: T1+  H1+\n")
    monkeypatch.setattr("mg_toolkit.inputs.stdin", stdin)
    code, out, _ = mg(capsys, "parse")
    assert (code, out) == (0, "circle 1: T1+ H1+\n")


def test_parse_braid_file(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("b.braid", "n=3\ns1 r2\ns1^-1\n")
    code, out, _ = mg(capsys, "parse", "--in", str(path))
    assert (code, out) == (0, "n=3\ns1 r2 s1^-1\n")


def test_move_list_and_apply(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("chord.gauss", "circle 1: T1+ H1+\n")
    code, out, _ = mg(capsys, "move", "--in", str(path), "--list")
    assert (code, out) == (0, "r1-remove arrows=1\n")
    code, out, _ = mg(
        capsys, "move", "--in", str(path), "--apply", "r1-remove arrows=1"
    )
    assert (code, out) == (0, "circle 1:\n")


def test_move_that_does_not_match(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    code, _, err = mg(
        capsys, "move", "--in", str(path), "--apply", "r1-remove arrows=1"
    )
    assert code == 1
    assert err.startswith("error: ")


def test_move_needs_an_action(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d1.gauss", D1)
    code, _, _ = mg(capsys, "move", "--in", str(path))
    assert code == 2


def test_usage_errors(capsys: pytest.CaptureFixture[str]) -> None:
    assert mg(capsys, "group", "--bogus")[0] == 2
    assert mg(capsys, "rep", "verify", "--rep", "phiS")[0] == 2
    assert mg(capsys)[0] == 2
    assert mg(capsys, "rep")[0] == 2


def test_domain_error(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("bad.gauss", "circle 1: T1+\n")
    code, out, err = mg(capsys, "invariants", "--in", str(path))
    assert (code, out) == (1, "")
    assert err.startswith("error: ")


def test_missing_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    code, _, err = mg(capsys, "reverse", "--in", str(tmp_path / "absent.gauss"))
    assert code == 1
    assert err.startswith("error: ")


def test_rep_image(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = mg(
        capsys, "rep", "image", "--rep", "phiS", "--braid", "s1", "--n", "2"
    )
    assert code == 0
    assert out.splitlines() == [
        "x1 -> x1 v1^-1 x2 v1 x1^-1",
        "x2 -> v2 x1 v2^-1",
        "v1 -> v2",
        "v2 -> v1",
    ]


def test_rep_image_needs_strands(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = mg(capsys, "rep", "image", "--rep", "phiS", "--braid", "s1")
    assert code == 1
    assert err == "error: --braid needs --n\n"


def test_rep_equiv_and_list(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = mg(capsys, "rep", "equiv", "--rep", "phiM", "--n", "3")
    assert (code, out) == (0, "equivalent=true tilde=phiS\n")
    code, out, _ = mg(capsys, "rep", "list", "--yaml")
    assert code == 0
    assert yaml.safe_load(out) == {"names": catalogue_names()}


def test_burau_eval(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = mg(
        capsys, "burau", "eval", "--rep", "burau", "--braid", "s1 s1^-1", "--n", "3",
        "--porcelain",
    )
    assert code == 0
    assert "identity=true" in out.splitlines()
    code, out, _ = mg(
        capsys, "burau", "eval", "--rep", "psi", "--braid", "s1", "--n", "2", "--theta",
        "--json",
    )
    assert code == 0
    assert json.loads(out)["identity"] is False


def test_realize(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("chain.pres", CHAIN)
    code, out, _ = mg(capsys, "realize", "--in", str(path))
    assert code == 0
    assert out.splitlines() == [
        "circle 1: N+ N-",
        "# meridian=x1",
        "# longitude=1",
        "# alpha=0",
    ]


def test_realize_round_trip(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    pres = write_input("chain.pres", CHAIN)
    _, realized, _ = mg(capsys, "realize", "--in", str(pres))
    gauss = write_input("realized.gauss", realized)
    _, from_diagram, _ = mg(capsys, "group", "--in", str(gauss), "--abelianization")
    _, direct, _ = mg(capsys, "abelianization", "--in", str(pres))
    assert from_diagram == direct == "free_rank=2 torsion=[]\n"


def test_realize_with_longitude(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("chain.pres", CHAIN)
    code, out, _ = mg(capsys, "realize", "--in", str(path), "--l", "1", "--x0", "1")
    assert code == 0
    assert out.splitlines()[0] == "circle 1: N+ N- N+ N-"
    assert "# longitude=1" in out.splitlines()
    code, _, err = mg(capsys, "realize", "--in", str(path), "--x0", "v1")
    assert code == 1
    assert err == "error: --x0 needs --l\n"


def test_peripheral(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d.gauss", "circle 1: N+ H1+ T1+ N- N+\n")
    code, out, _ = mg(capsys, "peripheral", "--in", str(path))
    assert (code, out) == (0, "meridian=x1 longitude=x3 v1 x1^-1 alpha=1\n")
    code, out, _ = mg(capsys, "peripheral", "--in", str(path), "--check", "--porcelain")
    assert code == 0
    lines = out.splitlines()
    assert "derivation=true" in lines
    assert {"commutes.s3=true", "commutes.s4=true", "commutes.s5=true"} <= set(lines)


def test_connectsum(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    left = write_input("plus.gauss", "circle 1: N+\n")
    right = write_input("minus.gauss", "circle 1: N-\n")
    code, out, _ = mg(capsys, "connectsum", "--left", str(left), "--right", str(right))
    assert (code, out) == (0, "circle 1: N+ N-\n")
    code, _, err = mg(
        capsys,
        "connectsum",
        "--left",
        str(left),
        "--right",
        str(right),
        "--left-gap",
        "5",
    )
    assert code == 1
    assert err.startswith("error: ")


def test_reverse(
    capsys: pytest.CaptureFixture[str], write_input: WriteInput
) -> None:
    path = write_input("d.gauss", "circle 1: N+ H1+ T1+ N- N+\n")
    code, out, _ = mg(capsys, "reverse", "--in", str(path))
    assert (code, out) == (0, "circle 1: N- N+ T1- H1- N-\n")


def test_porcelain_lines_flatten_nesting() -> None:
    data: dict[str, object] = {
        "a": [1, 2],
        "b": {"c": True, "d": None},
        "rows": [["1", "t"]],
    }
    assert list(porcelain_lines(data)) == [
        "a=1",
        "a=2",
        "b.c=true",
        "b.d=none",
        "rows=1, t",
    ]


def test_format_flags_are_exclusive() -> None:
    parser = create_parser()
    args = parser.parse_args(["bigelow", "--yaml"])
    assert Format(args.format) == Format.YAML
    with pytest.raises(SystemExit):
        parser.parse_args(["bigelow", "--json", "--yaml"])


def test_sniff_and_suffix(write_input: WriteInput) -> None:
    assert sniff("# comment\ncircle 1: N+") == InputKind.GAUSS
    assert sniff("gens: x1 v1") == InputKind.PRESENTATION
    assert sniff("n = 3\ns1") == InputKind.BRAID
    with pytest.raises(InputError):
        sniff("hello")
    path = write_input("chain.txt", CHAIN)
    assert isinstance(load_input(path), Presentation)


def test_braid_file_needs_header() -> None:
    assert parse_braid_file("n=2\n").strand_count == 2
    with pytest.raises(InputError):
        parse_braid_file("s1 s2\n")


def test_packaged_settings() -> None:
    settings = load_settings()
    assert settings["search"]["limit"] == 10_000_000
    assert settings["peripheral"]["quotients"] == ["s3", "s4", "s5"]


def test_settings_need_every_section(write_input: WriteInput) -> None:
    text = "[search]\nlimit = 5\nsimplify = true\njobs = 1\n"
    path = write_input("partial.toml", text)
    with pytest.raises(SettingsError):
        load_settings(path)
