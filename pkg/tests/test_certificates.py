import pytest

from fano3.certificates import (
    AXIOMS,
    CITED_LEMMA,
    MECHANICAL,
    CertStep,
    EliminationCertificate,
    Verdict,
    dumps_certificates,
    loads_certificates,
)


def test_step_validation():
    CertStep(MECHANICAL, "enumerated everything", "contradiction", 84)
    CertStep(CITED_LEMMA, "geometric input", "assumed", None, "half-point-parity")
    with pytest.raises(ValueError):
        CertStep("guesswork", "?", "?")
    with pytest.raises(ValueError):
        CertStep(CITED_LEMMA, "no such axiom", "assumed", None, "wishful-thinking")
    with pytest.raises(ValueError):
        CertStep(MECHANICAL, "mechanical with citation", "ok", None, "hirzebruch-bound")


def test_verdict_requires_contradiction():
    cert = EliminationCertificate(1)
    cert.mechanical("looked around", "narrowed")
    with pytest.raises(ValueError):
        Verdict(True, cert)
    Verdict(False, cert)
    cert.mechanical("no assignment works", "contradiction", 84)
    Verdict(True, cert)


def test_fully_mechanical_flag():
    cert = EliminationCertificate(2)
    cert.mechanical("a", "narrowed")
    assert cert.fully_mechanical
    cert.cite("hirzebruch-bound", "b")
    assert not cert.fully_mechanical
    counts = cert.kind_counts()
    assert counts[MECHANICAL] == 1 and counts[CITED_LEMMA] == 1


def test_json_round_trip():
    cert = EliminationCertificate(7)
    cert.mechanical("exhausted 180 assignments", "contradiction", 180)
    cert.cite("rational-connectedness", "leaf family is a line")
    text = dumps_certificates([cert])
    back = loads_certificates(text)
    assert len(back) == 1
    assert back[0].case_id == 7
    assert back[0].steps == cert.steps


def test_axioms_have_descriptions():
    for name, description in AXIOMS.items():
        assert name == name.strip().lower()
        assert len(description) > 20
