import itertools

import pytest

import critideals as ci


def test_j_tree_ideal():
    t = ci.Tree.family("J:5,4,3")
    assert t.size == 10
    assert ci.critical_ideal(t, 9) == [
        "x1*x2*x3*x4 - x1*x2 - x1*x4 - x3*x4 + 1",
        "x6*x7*x8 - x6 - x8",
        "x9*x10 - 1",
    ]


def test_star_and_trivial_ideals():
    assert ci.critical_ideal(ci.Tree.family("star:4"), 3) == ["x1", "x2", "x3", "x4"]
    assert ci.critical_ideal(ci.Tree.family("path:5"), 4) == ["1"]


def test_provenance_reproduces_generators():
    t = ci.Tree.family("c5:5")
    for poly, matching in ci.critical_ideal_with_provenance(t, 8):
        assert ci.d_of_matching(t, matching) == poly


def test_gamma_certificate():
    cert = ci.certify_gamma(ci.Tree.family("c5:7"))
    assert cert["nu2"] == 9 and cert["ok"]


def test_expansion_of_caterpillar():
    t = ci.Tree.from_edges(9, [(1, 2), (2, 3), (2, 4), (2, 5), (5, 6), (6, 7), (6, 8), (6, 9)])
    terms = ci.expand_nonminimal(t, "1!,2!,3!,4!,5!,6!")
    assert len(terms) == 3
    assert sum(coeff == "-x5*x6 + 1" for coeff, _ in terms) == 2


def test_groebner_round_trip():
    basis = ci.groebner_basis(["2*x1", "3*x1"])
    assert ci.reduces_to_zero("x1", basis)
    assert not ci.reduces_to_zero("1", basis)
    assert ci.is_reduced_groebner_basis(["x1", "x2"])
    assert ci.normalize("-x2 + x1") == "x1 - x2"


def test_groups_and_snf():
    assert ci.arithmetical_c5_group(6)["text"] == "Z_2 ⊕ Z_2"
    assert ci.arithmetical_c5_group(7)["torsion"] == [4]
    assert ci.critical_group("4\n1 2\n2 3\n3 4\n4 1\n")["torsion"] == [4]
    big = 10**30
    assert ci.smith_normal_form([[2 * big, 0], [0, 3]]) == [1, 6 * big]


def test_small_trees_agree_with_all_minors():
    for n in range(2, 6):
        for code in itertools.product(range(1, n + 1), repeat=n - 2):
            edges = prufer_edges(n, code)
            t = ci.Tree.from_edges(n, edges)
            for j in range(1, n + 1):
                minors = set(ci.all_minor_ideal(t, j))
                assert set(ci.critical_ideal(t, j)) <= minors


def prufer_edges(n, code):
    degree = [1] * (n + 1)
    for v in code:
        degree[v] += 1
    edges = []
    for v in code:
        leaf = min(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    a, b = [u for u in range(1, n + 1) if degree[u] == 1]
    edges.append((a, b))
    return edges


def test_suite_records():
    records = ci.run_suite("arithmetical")
    assert records and all(r["status"] == "pass" for r in records)
    assert "oracle" in ci.suite_names()


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        ci.Tree.parse("3\n1 2\n2 3\n3 1\n")
    with pytest.raises(ValueError):
        ci.critical_ideal(ci.Tree.family("path:3"), 7)
    with pytest.raises(ci.ResourceLimitError):
        ci.all_minor_ideal(ci.Tree.family("path:20"), 10)
