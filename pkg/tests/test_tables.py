import pytest

from axcount import tables
from axcount.cli import _sizes

CO1 = 4157776806543360000
M24 = 244823040


def test_suborbit_totals():
    rep = tables.check_suborbit_totals()
    assert rep.ok, rep.failures
    assert rep.details == {"table 1": (251, 405, 123), "table 3": (59, 87, 32)}


@pytest.mark.parametrize("fusion,rows", [(tables.table5, tables.table1),
                                         (tables.table6, tables.table3)])
def test_fusion_aggregation(fusion, rows):
    rep = tables.check_fusion(fusion(), rows())
    assert rep.ok, rep.failures
    assert set(rep.details) == {r.label for r in rows()}


def test_stabilizer_products():
    rep = tables.check_stabilizer_products(CO1)
    assert rep.ok, rep.failures
    assert len(rep.details) == 22 and all(rep.details.values())


def test_stabilizer_products_detect_wrong_order():
    assert not tables.check_stabilizer_products(CO1 + 98280).ok
    assert not tables.check_stabilizer_products(CO1 + 1).ok


def test_classical_orders_from_formulas():
    assert tables.check_classical_orders().ok
    assert tables.symplectic_order(3, 2) == 1451520
    assert tables.unitary_order(4, 2) == 25920
    assert tables.linear_order(3, 4) == 20160


def test_fusion_sizes():
    rep = tables.check_fusion_sizes(M24)
    assert rep.ok, rep.failures


@pytest.mark.parametrize("rows,table", [(tables.table1, "axes"), (tables.table3, "feasible")])
def test_tables_agree_with_eigenvector(rows, table):
    assert tables.check_against_counting(rows(), _sizes(table).sizes).ok


def test_fusion_notation():
    assert tables.parse_fusion("4B,6A^2") == [("4B", 1), ("6A", 2)]
    assert tables.expected_parts(1, "2A,4B,4C") == (("2A", 2), ("4B", 2), ("4C", 2))
    assert tables.expected_parts(6, "8B^3") == (("8B", 1),)
    with pytest.raises(ValueError):
        tables.expected_parts(2, "2A,4B")
    with pytest.raises(ValueError):
        tables.expected_parts(4, "2A^3")


def test_evaluate_order():
    assert tables.evaluate_order("2^9 * 3 * U4(2) * 2") == 2 ** 10 * 3 * 25920
    with pytest.raises(ValueError):
        tables.evaluate_order("Foo")
    assert tables.e_order("2^{1+8+6}") == 2 ** 15


def test_check_all_with_correct_orders():
    assert all(r.ok for r in tables.check_all(CO1, M24))
