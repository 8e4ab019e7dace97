"""Three-valued verdicts for bounded decision procedures.

Every analysis that searches inside a finite window answers holds, fails,
or unknown. A holds/fails verdict should carry a certificate that a
checker can replay; unknown instead records the bounds that were tried,
so a caller knows what to raise.
"""
from __future__ import annotations

from dataclasses import dataclass, field

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown"

_EXIT = {HOLDS: 0, FAILS: 1, UNKNOWN: 2}


@dataclass
class Verdict:
    status: str
    certificate: dict | None = None
    bound: dict | None = None

    def __post_init__(self):
        if self.status not in _EXIT:
            raise ValueError(f"bad verdict status {self.status!r}")

    @staticmethod
    def holds(certificate: dict | None = None, bound: dict | None = None) -> Verdict:
        return Verdict(HOLDS, certificate, bound)

    @staticmethod
    def fails(certificate: dict | None = None, bound: dict | None = None) -> Verdict:
        return Verdict(FAILS, certificate, bound)

    @staticmethod
    def unknown(bound: dict | None = None) -> Verdict:
        return Verdict(UNKNOWN, None, bound)

    def is_holds(self) -> bool:
        return self.status == HOLDS

    def is_fails(self) -> bool:
        return self.status == FAILS

    def is_unknown(self) -> bool:
        return self.status == UNKNOWN

    @property
    def exit_code(self) -> int:
        return _EXIT[self.status]

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.bound is not None:
            out["bound"] = self.bound
        return out


@dataclass
class SimplicityReport:
    """Combined verdict: simple iff cofinal and no local periodicity."""

    cofinal: Verdict
    nlp: Verdict
    simple: Verdict = field(init=False)
    certificates: list = field(init=False)

    def __post_init__(self):
        a, b = self.cofinal, self.nlp
        if a.is_fails() or b.is_fails():
            parts = []
            if a.is_fails():
                parts.append("not cofinal")
            if b.is_fails():
                parts.append("local periodicity present")
            self.simple = Verdict.fails({"reason": ", ".join(parts)})
        elif a.is_holds() and b.is_holds():
            self.simple = Verdict.holds({"reason": "cofinal and no local periodicity"})
        else:
            self.simple = Verdict.unknown()
        self.certificates = [
            {"check": name, "certificate": v.certificate}
            for name, v in (("cofinal", a), ("nlp", b))
            if v.certificate is not None
        ]

    def to_json(self) -> dict:
        return {
            "cofinal": self.cofinal.to_json(),
            "nlp": self.nlp.to_json(),
            "simple": self.simple.to_json(),
            "certificates": self.certificates,
        }
