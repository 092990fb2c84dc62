import pytest

import parklot


def test_star_counts():
    assert parklot.count(parklot.star(4, "sink"), 2) == 15
    assert parklot.count(parklot.star(4, "source"), 4) == 73
    assert parklot.count(parklot.path(3, "sink"), 3) == 16


def test_large_count_is_exact():
    # 21^19 overflows 64 bits.
    n = parklot.formula("classical", [20, 20])["values"]
    assert list(n.values())[0] == 21**19


def test_check_and_witness():
    g = parklot.parse_graph("n 3 root 1 orient sink\n2 1\n3 2\n")
    assert parklot.is_parking_function(g, [3, 3])
    assert parklot.witness(g, [3, 3]) == [3, 2]
    assert not parklot.is_parking_function(parklot.star(4, "sink"), [1, 1])
    assert parklot.witness(parklot.star(4, "sink"), [1, 1]) is None


def test_flip_is_an_involution():
    t = parklot.spider([2, 3], "sink")
    s = [3, 3, 5]
    assert parklot.flip(t, parklot.flip(t, s)) == s
    assert parklot.flip_vertex(t, 1) == 1


def test_graph_basics():
    g = parklot.star(4, "source")
    assert len(g) == 4 and g.root == 1 and g.orient == "source"
    assert g.reversed().orient == "sink"
    assert g == parklot.parse_graph(str(g))
    assert parklot.minleafdist(g) == 2
    assert parklot.minleafdist(parklot.path(5, "sink")) is None


def test_errors():
    with pytest.raises(parklot.ParseError):
        parklot.parse_graph("n 3 root 1 orient sink\n2 x\n")
    with pytest.raises(parklot.BudgetExceeded):
        parklot.count(parklot.star(9, "sink"), 9, budget=1000)
    with pytest.raises(parklot.Error):
        parklot.is_parking_function(parklot.star(3, "sink"), [7])


def test_suite_report():
    r = parklot.run_suite("star-exact", max_n=4, timing=False)
    assert r["suite"] == "star-exact"
    assert r["passed"] is True
    assert "elapsed_seconds" not in r
    assert "crudebounds" in parklot.suite_names()
