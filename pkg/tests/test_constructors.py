import pytest

import oracle
from lcgroups.constructors import (
    Atom,
    CayleyTable,
    GroupSpecError,
    InvalidTable,
    Product,
    build_group,
    build_named,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    heisenberg_table,
    parse_group_spec,
    regular_representation,
    wreath_cyclic,
)
from lcgroups.perm import center
from lcgroups.structure import is_nilpotent, nilpotency_class


@pytest.mark.parametrize("spec,order,exponent", [
    ("Dih(8)", 8, 4),
    ("Alt(4)", 12, 6),
    ("Heis(3)", 27, 3),
    ("Sym(5)", 120, 60),
    ("Dic(2)", 8, 4),
    ("Dic(3)", 12, 12),
    ("ElemAb(3,2)", 9, 3),
    ("Cyc(1)", 1, 1),
    ("Wr(2)", 8, 4),
    ("Wr(3)", 81, 9),
    ("Dih(2)", 2, 2),
    ("Dih(4)", 4, 2),
])
def test_named_orders(spec, order, exponent):
    G = build_named(spec)
    assert (G.order, G.exponent) == (order, exponent)


def test_heisenberg_matches_table():
    G = build_named("Heis(3)")
    assert nilpotency_class(G) == 2
    T = heisenberg_table(3)
    assert T.order == 27
    R = regular_representation(T)
    assert R.order == 27 and center(R).order == 3


def test_dihedral_oracle():
    assert oracle.images(dihedral(8)) == oracle.dihedral8()


def test_dicyclic_is_quaternion_for_n2():
    Q = dicyclic(2)
    inv = [i for i in range(Q.order) if Q.orders[i] == 2]
    assert len(inv) == 1


def test_wreath():
    W2 = wreath_cyclic(2)
    assert W2.order == 8 and not W2.is_abelian and W2.exponent == 4
    assert nilpotency_class(W2) == 2
    W3 = wreath_cyclic(3)
    assert W3.order == 81 and is_nilpotent(W3)
    assert len(oracle.closure([g.images for g in W3.generators])) == 81


def test_direct_product():
    D = dihedral(8)
    assert direct_product(cyclic(1), D).order == 8
    assert direct_product(D, D).order == 64
    G = direct_product(D, cyclic(3))
    assert (G.order, G.exponent) == (24, 12)


def test_regular_representation_small():
    assert regular_representation(CayleyTable(((0,),))).order == 1
    C4 = CayleyTable.from_function(4, lambda i, j: (i + j) % 4)
    G = regular_representation(C4)
    assert G.order == 4 and G.exponent == 4


@pytest.mark.parametrize("rows,match", [
    (((0, 1), (1, 1)), "row"),
    (((1, 0), (0, 1)), "identity"),
    (((0, 1, 2), (1, 2, 0)), "square"),
])
def test_invalid_tables(rows, match):
    with pytest.raises(InvalidTable, match=match):
        CayleyTable(rows)


def test_non_associative_latin_square():
    # a loop of order 5 that is not a group
    rows = ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    with pytest.raises(InvalidTable, match="associative"):
        CayleyTable(rows)


def test_parse_examples():
    s = parse_group_spec("prod(Dih(8),Dih(8))")
    assert isinstance(s.root, Product)
    assert s.root.left == Atom("Dih", (8,)) == s.root.right
    w = parse_group_spec("Wr(3)").root
    assert w == Atom("Wr", (3,))
    assert parse_group_spec("  prod( Sym(3) , ElemAb(2, 2) ) ").expression == "prod(Sym(3),ElemAb(2,2))"


def test_parse_error_offset():
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec("prod(Dih(8),")
    assert exc.value.offset == 12


@pytest.mark.parametrize("text", ["Foo(3)", "Cyc()", "Dih(7)", "Wr(4)", "ElemAb(4,2)", "Cyc(3) x", "Heis(3,3)", ""])
def test_parse_rejects(text):
    with pytest.raises(GroupSpecError):
        build_group(text)


def test_build_file_atom(tmp_path):
    f = tmp_path / "d8.txt"
    f.write_text("(1 2 3 4)\n(1 3)\n")
    assert build_group(f"file:{f}").order == 8
    assert build_group(f"prod(file:{f},Cyc(3))").order == 24
