import pytest

from lcgroups.harness.groupfile import GroupFileError, dump_group, load_group_file, parse_cycles_line, parse_group_text


def write(tmp_path, text):
    f = tmp_path / "g.txt"
    f.write_text(text)
    return f


def test_cyclic_five(tmp_path):
    G = load_group_file(write(tmp_path, "(1 2 3 4 5)\n"))
    assert G.order == 5 and G.is_abelian


def test_d8(tmp_path):
    G = load_group_file(write(tmp_path, "# dihedral\n(1 2 3 4)\n(1 3)   # a reflection\n\n"))
    assert G.order == 8 and G.exponent == 4


def test_repeated_point(tmp_path):
    with pytest.raises(GroupFileError, match="repeated point") as exc:
        load_group_file(write(tmp_path, "(1 2 3)\n(1 2 2)\n"))
    assert exc.value.line == 2


@pytest.mark.parametrize("text", ["(1 2", "1 2)", "(a b)", "(0 1)", "(1 (2))", "# only a comment\n"])
def test_malformed(text):
    with pytest.raises(GroupFileError):
        parse_group_text(text)


def test_degree_is_largest_point():
    gens = parse_group_text("(1 2)\n(5 6)\n")
    assert all(g.degree == 6 for g in gens)


def test_multiple_cycles_and_identity():
    assert parse_cycles_line("(1 2)(3 4 5)") == [(0, 1), (2, 3, 4)]
    assert parse_cycles_line("()") == []


def test_dump_round_trip(tmp_path, group):
    G = group("Alt(4)")
    H = load_group_file(write(tmp_path, dump_group(G)))
    assert H.order == 12 and set(H.elements) == set(G.elements)
