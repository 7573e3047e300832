import json

import pytest

import monosub


def test_fibonacci_family():
    fam = monosub.Family.fibonacci()
    assert fam.enumerate(5) == [(1, 0), (1, 1), (2, 3), (5, 8), (13, 21)]
    assert monosub.fibonacci(-1) == 1
    assert monosub.fibonacci(100) == 354224848179261915075
    assert fam.exceed_slope((8, 5)) == (4, (13, 21))
    assert fam.hypothesis_check()["theorem_applies"]


def test_finite_family_needs_origin():
    with pytest.raises(monosub.InvalidFamily):
        monosub.Family.finite([(2, 1)])
    fam = monosub.Family.finite([(1, 0), (2, 3)])
    report = fam.hypothesis_check()
    assert not report["theorem_applies"]
    assert report["sup_is_attained"] == "true"


def test_membership():
    gens = [(1, 1), (1, 2), (1, 3), (1, 4)]
    assert monosub.factorizations(gens, (2, 5)) == [
        [((1, 1), 1), ((1, 4), 1)],
        [((1, 2), 1), ((1, 3), 1)],
    ]
    assert monosub.member([(1, 0), (1, 1), (1, 2)], (1, 3)) is None
    assert monosub.member([(1, 0)], (0, 0)) == []
    assert monosub.member_bruteforce([(1, 0), (1, 1)], (3, 2))
    assert monosub.max_slope([(1, 0), (1, 1), (2, 3), (5, 8)]) == (8, 5)
    assert monosub.compare_slopes((21, 13), (8, 5)) == 1
    with pytest.raises(monosub.BoundExceeded):
        monosub.member_bruteforce([(1, 0)], (21, 0))


def test_subalgebra():
    vertical = monosub.Family.vertical()
    r = monosub.in_subalgebra("1*x^2*y^5", vertical)
    assert r["inside"]
    assert r["generating_monomials"] == [(1, 0), (1, 5)]
    r = monosub.in_subalgebra("1*x^0*y^1", vertical)
    assert not r["inside"]
    assert r["failing_terms"] == [(0, 1)]
    assert monosub.in_subalgebra("3*x^1*y^0 + 2*x^1*y^2", vertical, modulus=5)["inside"]
    with pytest.raises(monosub.NotInSubalgebra):
        monosub.extract_mstar(["x + y"], vertical)
    with pytest.raises(monosub.ParseError):
        monosub.in_subalgebra("x^-1", vertical)


def test_certificates_round_trip():
    cert = monosub.construct_witness(monosub.Family.vertical(), ["x", "x*y", "x*y^2"])
    assert cert.beta == (2, 1)
    assert cert.witness == (1, 3)
    assert cert.verify(deep=True)["passed"]
    text = cert.to_json()
    assert monosub.Certificate.from_json(text) == cert
    assert monosub.verify_certificate_text(text)["passed"]

    tampered = json.loads(text)
    tampered["witness"] = ["1", "2"]
    report = monosub.verify_certificate_text(json.dumps(tampered))
    assert not report["passed"]

    tampered["version"] = "nonfg-cert/0"
    with pytest.raises(monosub.UnsupportedVersion):
        monosub.verify_certificate_text(json.dumps(tampered))

    with pytest.raises(monosub.TheoremNotApplicable):
        monosub.construct_witness_from_generators(monosub.Family.finite([(1, 0), (1, 1)]), [(1, 0)])


def test_escalation_chain_big_integers():
    chain = monosub.escalation_chain(monosub.Family.fibonacci(), 50)
    indices = [c.witness_in_family_index for c in chain]
    assert indices == sorted(set(indices))
    assert chain[-1].witness[0] > 2**64
    assert all(c.verify()["passed"] for c in chain)
