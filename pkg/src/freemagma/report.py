from dataclasses import dataclass
from typing import Optional

from .elements import MagmaElement, format_element


@dataclass
class VerificationRecord:
    check: str
    bound: Optional[int]
    passed: bool
    witness: Optional[MagmaElement] = None
    detail: str = ""

    def to_dict(self):
        d = {
            "check": self.check,
            "bound": self.bound,
            "passed": self.passed,
            "witness": None if self.witness is None else format_element(self.witness, "canonical"),
        }
        if self.detail:
            d["detail"] = self.detail
        return d
