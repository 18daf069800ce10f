import io

import pytest

from unilabel.cli import main
from unilabel.io import parse_graph, parse_label_file


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_build_dot():
    code, out, _ = run("build", "--construction", "deg2", "--n", "5", "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {") and out.count(" -- ") == 11
    assert all(f"  {v};" in out for v in range(9))


def test_build_edgelist_round_trips():
    code, out, _ = run("build", "--construction", "paths", "--n", "11")
    g = parse_graph(out)
    assert code == 0 and (g.n, g.num_edges) == (16, 14)


def test_build_degd_needs_d():
    assert run("build", "--construction", "degd-det", "--n", "3")[0] == 2
    code, out, _ = run("build", "--construction", "degd-det", "--n", "3", "--d", "3", "--format", "csv")
    assert code == 0 and out.startswith("u,v\n")


def test_embed_from_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run("embed", "--construction", "paths", "--input", str(p))
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert [r[0] for r in rows] == ["0", "1", "2", "3"]
    assert len({r[1] for r in rows}) == 4


def test_embed_cycle_length():
    code, out, _ = run("embed", "--construction", "cycles-aware", "--n", "24", "--length", "5")
    assert code == 0 and out.splitlines()[0] == "0\t28"


def test_label_and_decode(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run("label", "--construction", "cycles-oblivious", "--input", str(p))
    assert code == 0
    header, labels = parse_label_file(out)
    assert header["scheme"] == "cycles_oblivious" and len(labels) == 5
    assert run("decode", "--construction", "cycles-oblivious", labels[0], labels[1])[1] == "1\n"
    assert run("decode", "--construction", "cycles-oblivious", labels[0], labels[2])[1] == "0\n"


def test_decode_deg2_example():
    assert run("decode", "--construction", "deg2", "100", "000")[1] == "1\n"


def test_decode_rejects_non_bits():
    assert run("decode", "--construction", "deg2", "12", "0")[0] == 2


def test_decode_size_aware_needs_n():
    code, _, err = run("decode", "--construction", "cycles-aware", "0", "1")
    assert code == 2 and "size-aware" in err


def test_rand_label_is_seeded(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("6 4\n0 1\n1 2\n3 4\n4 5\n")
    args = ("label", "--construction", "degd-rand", "--input", str(p), "--d", "2", "--seed", "9")
    first, second = run(*args), run(*args)
    assert first[0] == 0 and first[1] == second[1]
    assert "seed=9" in first[1]


def test_verify_all():
    code, out, _ = run("verify", "--suite", "all", "--max-n", "8")
    assert code == 0
    assert out.rstrip().endswith("checks passed")
    assert "FAIL" not in out


def test_verify_output_is_byte_stable():
    a = run("verify", "--suite", "universality", "--max-n", "6", "--format", "csv")
    b = run("verify", "--suite", "universality", "--max-n", "6", "--format", "csv")
    assert a == b and a[1].startswith("construction,check")


def test_bounds_csv():
    code, out, _ = run("bounds", "--n", "20", "--d", "4", "--o-constant", "rand_upper=2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,D,name,kind,log2_value,exact_value"
    assert "20,4,det_size,construction,10.607330,1560" in lines


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["bounds", "--n", "3", "--d", "5"],
        ["bounds", "--n", "3", "--d", "2", "--o-constant", "bogus=1"],
        ["build", "--construction", "deg2"],
        ["build", "--construction", "degd-rand", "--n", "3"],
        ["embed", "--construction", "deg2", "--input", "/nonexistent/file"],
        ["verify", "--jobs", "0"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_parse_error_is_usage(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2 1\n0 2\n")
    code, _, err = run("embed", "--construction", "deg2", "--input", str(p))
    assert code == 2 and "line 2" in err


def test_help_exits_zero():
    assert run("--help")[0] == 0
