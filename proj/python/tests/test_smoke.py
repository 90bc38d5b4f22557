import json

import pytest

import charp


@pytest.fixture
def r3():
    return charp.Ring(3)


def test_parse_and_print(r3):
    f = r3.parse("x*y*(x-y)*(x-t*y)")
    assert str(f) == "2*t*x^2*y^2 + t*x*y^3 + x^3*y + 2*x^2*y^2"
    assert r3.parse(str(f)) == f
    assert str(charp.Ring(2).parse("(x+y)^2")) == "x^2 + y^2"


def test_arithmetic(r3):
    x, y = r3.parse("x"), r3.parse("y")
    assert (x + y) * (x - y) == r3.parse("x^2 - y^2")
    assert (x + y) ** 3 == r3.parse("x^3 + y^3")
    assert (x + y).frobenius(9) == r3.parse("x^9 + y^9")


def test_parse_error_has_position(r3):
    with pytest.raises(charp.ParseError, match="position 4"):
        r3.parse("x + z")
    with pytest.raises(ValueError):
        charp.Ring(4)


def test_ideal_membership(r3):
    i = charp.Ideal(r3, ["x^3", "y^3", "x*y*(x-y)*(x-t*y)"])
    assert "(1+t)*x*y*(x-y)*y" in i
    assert "x*y*(x-y)*y" not in i
    assert r3.parse("x^4") in i


def test_ideal_operations(r3):
    ideal = lambda *g: charp.Ideal(r3, list(g))
    assert ideal("x").intersect(ideal("y")) == ideal("x*y")
    assert ideal("x^2", "y^2").colon("x-y") == ideal("y^2", "x+y")
    assert ideal("x^2*y").saturate(ideal("x")) == ideal("y")
    assert ideal("x - t", "x").eliminate(["x", "y"]) == ideal("t")
    assert ideal("x", "y").bracket_power(3) == ideal("x^3", "y^3")
    assert str(ideal("x", "y", "t^2+1").contract_to_t()) == "t^2 + 1"
    basis = ideal("x^2 - t*y", "x*y - 1").groebner_basis()
    assert [str(g) for g in basis] == ["t*y^2 + 2*x", "x^2 + 2*t*y", "x*y + 2"]


def test_tau_and_factor():
    assert str(charp.tau(2, 3)) == "t^6 + t^5 + t^4 + t^3 + t^2 + t + 1"
    factors = charp.factor(charp.tau(2, 3))
    assert [(str(f), m) for f, m in factors] == [("t^3 + t + 1", 1), ("t^3 + t^2 + 1", 1)]
    assert charp.is_irreducible(charp.UniPoly(2, [1, 1, 1]))


def test_torsion_and_probes():
    f = charp.four_lines(2)
    divisors, free_rank = charp.torsion_divisors(f, 3)
    assert charp.tau(2, 3).divides(divisors[-1])
    assert free_rank > 0
    probes = charp.maximal_ass_primes(f, 3)
    assert [str(p["prime"]) for p in probes if p["associated"]] == ["t^3 + t + 1", "t^3 + t^2 + 1"]
    assert charp.witness_colon(2, 3) == charp.tau(2, 3)
    with pytest.raises(charp.DegenerateCaseError):
        charp.witness_colon(2, 1)


def test_checks():
    assert charp.lemma11_check(3, 2)
    assert all(charp.theorem12_check(5, 1).values())
    assert charp.ge_check(charp.four_lines(3), 1)
    i = charp.frobenius_ideal(charp.four_lines(3), 1)
    associated, witness = charp.is_associated_maximal(i, charp.UniPoly(3, [1, 1]))
    assert associated and witness not in i


def test_sweep_record():
    rec = json.loads(charp.sweep_record(3, 1))
    assert rec["q"] == 3 and rec["lemma11"] and rec["thm12_member_tau_g"]
    assert rec["divisors"] == ["t + 1"]


def test_run_cli():
    code, out, err = charp.run_cli(["member", "--p", "2", "x^2+y^2", "--", "x+y"])
    assert (code, out, err) == (0, "true\n", "")
    code, out, _ = charp.run_cli(["verify-paper", "--p", "3", "--e", "1", "--json"])
    assert code == 0 and json.loads(out)["all_passed"]
    assert charp.run_cli(["gb", "--p", "9", "x"])[0] == 2
