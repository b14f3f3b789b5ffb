"""Check results shared by the verification suites."""
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class Check:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.violations

    def record(self, ok, message):
        self.checked += 1
        if not ok:
            self.violations.append(message)

    def to_dict(self, max_violations=20):
        detail = dict(self.detail)
        detail["checked"] = self.checked
        if self.violations:
            detail["violations"] = len(self.violations)
            detail["counterexamples"] = self.violations[:max_violations]
        return {"name": self.name, "pass": self.passed, "detail": detail}


def frac_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s):
    return Fraction(s)
