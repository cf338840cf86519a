"""Smoke tests for the python bindings."""

import pytest

import quasitwist as qt


def test_factor():
    factors = qt.factor(5, 11, "2")
    assert factors == [
        ("x + 2", 1),
        ("x^5 + x^4 + x^3 + 2*x^2 + x + 2", 1),
        ("x^5 + 2*x^4 + x^3 + 2*x^2 + 3*x + 2", 1),
    ]
    repeated = qt.factor(2, 6, "1")
    assert repeated == [("x + 1", 2), ("x^2 + x + 1", 2)]


def test_euclidean_dual_of_the_gf5_code():
    c = qt.Code.from_triple(
        5,
        11,
        "2",
        "x+2",
        "x^6+4*x^5+2*x^3+3*x^2+x+3",
        "(x^5+x^4+x^3+2*x^2+x+2)*(x^5+2*x^4+x^3+2*x^2+3*x+2)",
    )
    assert (c.n, c.dimension) == (22, 11)
    d = c.dual("euclidean")
    assert d.provenance == "closed-form"
    assert d.generators[1][1] == "4*x + 2"
    assert d.generators[0][0] == (
        "3*x^10 + x^9 + 2*x^8 + 4*x^7 + 3*x^6 + x^5 + 2*x^4 + 4*x^3 + 3*x^2 + x + 2"
    )
    assert d.code.dimension == 11
    assert d.code.equals(c.dual("euclidean", method="brute").code)


def test_distance_enumeration():
    c = qt.Code.from_triple(3, 10, "-1", "x^4+2*x^3+x+1", "x^4+2*x^3+x+1", "(x^2+1)*(x^4+2*x^3+x+1)")
    assert c.is_self_orthogonal("symplectic")
    rep = c.min_distance()
    assert (rep.n, rep.k, rep.d) == (20, 10, 6)
    assert rep.exhaustive


def test_css_parameters():
    c1 = qt.Code.from_triple(
        4, 5, "w", "x^2+w*x+w", "w^2*(x^2+w*x+w)", "(x^2+x+w)*(x^2+w*x+w)", modulus="w^2+w+1"
    )
    c2 = qt.Code.from_generators(
        4,
        5,
        "w^2",
        [["x^5-w^2", "0"], ["(x+w)*(w*x^3+w*x^2+w^2*x+w^2)", "w*(x+w)"]],
        modulus="w^2+w+1",
    )
    assert qt.css_check(c1, c2)
    assert qt.css_parameters(c1, c2) == (10, 2, 4)


def test_additive_conversion_and_trace_dual():
    basis = qt.find_basis(3, 2, "almost-self-dual", modulus="w^2+2*w+2")
    assert basis.kind == "almost-self-dual"
    assert basis.eps != "0"

    c = qt.Code.from_triple(3, 4, "2", "x+1", "1", "x^2+x+2", modulus="")
    ca = c.to_additive(basis="almost-self-dual", modulus="w^2+2*w+2")
    q, k = ca.cardinality
    assert (q, k) == (3, c.dimension)
    dual = ca.trace_dual("trace-euclidean")
    qd, kd = dual.cardinality
    assert kd == 2 * 4 - k
    # biduality through the shadow
    again = dual.trace_dual("trace-euclidean")
    assert again.shadow.equals(c)


def test_code_document_round_trip():
    c = qt.Code.from_triple(5, 11, "2", "x+2", "0", "x^5+x^4+x^3+2*x^2+x+2")
    back = qt.parse_code(c.describe())
    assert back.equals(c)


def test_one_generator_counterexample():
    c = qt.Code.from_triple(
        2, 6, "1", "(x+1)*(x^2+x+1)", "x*(x+1)*(x^2+x+1)", "(x+1)*(x^2+x+1)^2"
    )
    assert c.one_generator_status() == "unknown"


def test_errors_are_typed():
    with pytest.raises(qt._core.DomainError):
        qt.Code.from_triple(5, 11, "0", "x+2", "0", "x+2")
    with pytest.raises(qt._core.BudgetExceeded):
        c = qt.Code.from_triple(5, 11, "2", "1", "0", "1")
        c.min_distance(budget=10)


def test_reproduce_target():
    report = qt.reproduce("quantum-css")
    assert report["ok"]
    assert report["target"] == "quantum-css"
    assert "all" in qt.reproduce_targets()
