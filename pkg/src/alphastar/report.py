"""Residual reports returned by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    threshold: float
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.threshold)

    def to_dict(self) -> dict:
        return {"name": self.name, "residual": float(self.residual),
                "threshold": float(self.threshold), "passed": self.passed,
                **({"detail": self.detail} if self.detail else {})}

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag} {self.name}: residual={self.residual:.3e} threshold={self.threshold:.1e}"


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def __str__(self) -> str:
        return "\n".join([self.title] + ["  " + c.line() for c in self.checks])


def merge(title: str, *reports: Report) -> Report:
    return Report(title, tuple(c for r in reports for c in r.checks))


def relative_residual(residual: complex, *terms: complex) -> float:
    """|residual| relative to the magnitudes involved, never below absolute."""
    return abs(residual) / max(1.0, *(abs(t) for t in terms))


def sampled_check(name: str, residuals, threshold: float, **detail) -> Check:
    """Check whose residual is the max over samples; records the worst index."""
    residuals = list(residuals)
    r, where = worst(residuals)
    detail = dict(detail, samples=len(residuals))
    if where is not None:
        detail["worst_sample"] = where
    return Check(name, r, threshold, detail)


def worst(residuals) -> tuple:
    """(max residual, index of the worst sample); (0.0, None) if empty."""
    best, where = 0.0, None
    for k, r in enumerate(residuals):
        if r > best or where is None:
            best, where = float(r), k
    return best, where
