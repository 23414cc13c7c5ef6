"""Replayable elimination certificates.

A certificate is an ordered list of steps that together rule out one
candidate.  Each step is either *mechanical* -- an exhaustive arithmetic
check whose domain size is recorded -- or *cited-lemma* -- a geometric
input taken on faith, identified by a named axiom.  The distinction is the
honest boundary of what a computer check establishes here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = [
    "MECHANICAL",
    "CITED_LEMMA",
    "CertStep",
    "EliminationCertificate",
    "Verdict",
    "certificate_to_dict",
    "certificate_from_dict",
    "dumps_certificates",
    "loads_certificates",
]

MECHANICAL = "mechanical"
CITED_LEMMA = "cited-lemma"

#: Named geometric axioms a cited-lemma step may reference.  Keeping them in
#: one table makes the pipeline report auditable: a run is "fully
#: mechanical" exactly when none of these names appear.
AXIOMS = {
    "crepant-point-classification": (
        "every crepant point has Gorenstein index 1 or 2; in the relevant "
        "baskets the index-2 case is the four-half-points configuration"
    ),
    "weil-pullback-additivity": (
        "over an open set where the relevant multiple of the polarization "
        "is Cartier, round-down pullbacks add up, so the defect divisor is "
        "exceptional over finitely many crepant points"
    ),
    "half-point-parity": (
        "an exceptional divisor over a Gorenstein-index-2 crepant point has "
        "local indices of equal parity at the four half-points"
    ),
    "rank2-foliation-exists": (
        "when the slope inequality fails the 16/5 bound, the tangent sheaf "
        "has a rank-2 piece of its Harder-Narasimhan filtration which is an "
        "algebraically integrable foliation with positive minimal slope"
    ),
    "rational-connectedness": (
        "the candidate variety is rationally connected, so the leaf family "
        "is parameterized by the projective line"
    ),
    "leaf-family-movability": (
        "the pushed-forward general leaf moves in a positive-dimensional "
        "linear system, and distinct fibers share no component"
    ),
    "hirzebruch-bound": (
        "a general leaf fiber maps birationally to a Hirzebruch surface "
        "F_n with n in {1,2}, whose anticanonical square is 8"
    ),
}


@dataclass(frozen=True)
class CertStep:
    """One step of an elimination argument.

    ``outcome`` is a short machine-friendly tag (e.g. "contradiction",
    "narrowed", "determined"); ``domain_size`` is the number of assignments
    exhausted by a mechanical step; ``citation`` names the axiom backing a
    cited-lemma step.
    """

    kind: str
    description: str
    outcome: str
    domain_size: int | None = None
    citation: str | None = None

    def __post_init__(self):
        if self.kind not in (MECHANICAL, CITED_LEMMA):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.kind == CITED_LEMMA:
            if self.citation not in AXIOMS:
                raise ValueError(f"cited-lemma step needs a known axiom, got {self.citation!r}")
        elif self.citation is not None:
            raise ValueError("mechanical steps carry no citation")


@dataclass
class EliminationCertificate:
    case_id: int
    steps: list = field(default_factory=list)

    def add(self, kind, description, outcome, domain_size=None, citation=None):
        step = CertStep(kind, description, outcome, domain_size, citation)
        self.steps.append(step)
        return step

    def mechanical(self, description, outcome, domain_size=None):
        return self.add(MECHANICAL, description, outcome, domain_size)

    def cite(self, citation, description, outcome="assumed"):
        return self.add(CITED_LEMMA, description, outcome, None, citation)

    @property
    def has_contradiction(self) -> bool:
        return any(s.outcome == "contradiction" for s in self.steps)

    @property
    def fully_mechanical(self) -> bool:
        return all(s.kind == MECHANICAL for s in self.steps)

    def kind_counts(self):
        counts = {MECHANICAL: 0, CITED_LEMMA: 0}
        for s in self.steps:
            counts[s.kind] += 1
        return counts


@dataclass(frozen=True)
class Verdict:
    eliminated: bool
    certificate: EliminationCertificate

    def __post_init__(self):
        if self.eliminated and not self.certificate.has_contradiction:
            raise ValueError("an elimination requires a contradiction step")


def certificate_to_dict(cert: EliminationCertificate) -> dict:
    return {
        "case_id": cert.case_id,
        "steps": [
            {
                "kind": s.kind,
                "description": s.description,
                "outcome": s.outcome,
                "domain_size": s.domain_size,
                "citation": s.citation,
            }
            for s in cert.steps
        ],
    }


def certificate_from_dict(data: dict) -> EliminationCertificate:
    cert = EliminationCertificate(int(data["case_id"]))
    for s in data["steps"]:
        cert.add(
            s["kind"],
            s["description"],
            s["outcome"],
            s.get("domain_size"),
            s.get("citation"),
        )
    return cert


def dumps_certificates(certs, **kwargs) -> str:
    return json.dumps([certificate_to_dict(c) for c in certs], **kwargs)


def loads_certificates(text: str):
    return [certificate_from_dict(d) for d in json.loads(text)]
