"""Smoke tests for the Python module: a thin pass over each exposed surface."""

import cmath
from fractions import Fraction

import pytest

import kalg


def test_bracket_and_formatting():
    assert kalg.bracket("K[2]", "K[-1]") == "3*K[1] - 2*K[2] - K[-1]"
    assert kalg.bracket("K[2]", "K[-2]") == "-2*K[2] - 2*K[-2] + 1/2*C"
    assert kalg.bracket("K[2]", "K[-2]", algebra="k0") == "-2*K[2] - 2*K[-2]"


def test_star_and_phi():
    assert kalg.star("(2+1i)*K[3]") == "(2-1i)*K[-3]"
    assert kalg.phi(1, "K[2]") == "-2"
    assert kalg.phi(2, "K[3]") == "0-9i"


def test_embedding_round_trip():
    assert kalg.embed_in_vir("K[1]") == "-L[0] + L[1]"
    assert kalg.project_to_k(kalg.embed_in_vir("K[2] - K[-3]")) == "K[2] - K[-3]"


def test_mbasis_and_vanishing_order():
    assert kalg.mbasis(0, 5) == "L[5] - L[6]"
    assert kalg.vanishing_order(kalg.project_to_k(kalg.mbasis(2, 5))) == 2
    assert kalg.vanishing_order("0") is None


def test_ideals():
    closure = kalg.ideal_closure(["K[1]"], window=6)
    assert closure["rank"] == 12
    assert kalg.classify_ideal([kalg.project_to_k(kalg.mbasis(2, 0))], window=10) == "KChain(2)"


def test_cocycle_reduce():
    entries = []
    for m in range(2, 11):
        v = Fraction(-m * (m * m - 1), 12)
        entries.append((-m, m, f"{v.numerator}/{v.denominator}", "0"))
    out = kalg.cocycle_reduce(entries, window=10)
    assert out["t"] == "1"
    assert out["coboundary"] == "0"


def test_morphisms():
    tau = {n: f"-K[{-n}]" for n in range(1, 9)}
    assert kalg.verify_morphism(tau, central="-C", window=8)["valid"]
    assert kalg.classify_morphism(tau, central="-C", window=8) == "LambdaTau(lambda=0)"

    bad = {n: f"K[{2 * n}]" for n in range(1, 5)}
    assert not kalg.verify_morphism(bad, central="C", window=4)["valid"]


def test_l0_extension():
    ok = kalg.l0_extend("0", window=6)
    assert ok["feasible"] and ok["a0"] == "1" and ok["b"] == "0"
    assert not kalg.l0_extend("1", window=6)["feasible"]


def test_verma_surface():
    g = kalg.gram(h="1", hp="0", c="2", lam="0", maxdeg=2)
    i = g["monomials"].index("K[-1]v")
    assert g["matrix"][i][i] == "-1"  # h^2 + h'^2 - 2h at (1, 0)

    assert kalg.shapovalov("5/7", "2", 1) == [["10/7"]]
    assert kalg.kac_det("1/4", "1", 2) == "0"
    assert kalg.ff_phi(1, 2, "1/4", "1") == "0"
    assert kalg.reducible(h="0", hp="0", c="5", max_level=4) == (1, 1)
    assert kalg.reducible(h="3/5", hp="1/9", c="11/4", max_level=6) is None
    assert kalg.singular_vector("0", "1", 1) == "L[-1]v"
    assert kalg.singular_vector("5/7", "22/9", 2) is None


def test_jets():
    assert kalg.jet_compose(("2", "3"), ("5", "7")) == ("10", "89")
    assert kalg.jet_inverse(("2", "3")) == ("1/2", "-3/8")
    assert kalg.jet_bracket(("1", "0"), ("0", "1")) == ("0", "-1")

    x1, x2 = kalg.jet_exp("1", "0", "1")
    assert abs(x1 - cmath.e) < 1e-12 and x2 == 0.0

    z = kalg.chi_lambda("2", "1")
    assert z == 1.0
    assert kalg.jet_of_field("-1/2*K[1] + 1/2*K[-1]") == ("1", "0")


def test_errors_propagate():
    with pytest.raises(ValueError):
        kalg.bracket("K[0]", "K[1]")
