"""Shared record types: identity checks, claim verdicts, constant estimates."""

import json
import math
from dataclasses import dataclass, field, asdict

VERIFIED = "verified"
FALSIFIED = "falsified"
INDETERMINATE = "indeterminate"


@dataclass
class IdentityCheck:
    """Left side vs right side of one identity at one n (or x)."""

    claim_id: str
    n_or_x: int
    lhs: float
    rhs: float
    equal: bool
    detail: dict = field(default_factory=dict)

    def as_csv_row(self):
        return [self.claim_id, str(self.n_or_x), repr(self.lhs), repr(self.rhs),
                "pass" if self.equal else "fail"]


@dataclass
class ClaimVerdict:
    """Machine-checkable outcome for one tested claim.

    documented_exception marks claims whose failure is a known, recorded
    finding rather than a regression; such failures do not flip the
    process exit status.
    """

    claim_id: str
    statement: str
    inputs: dict
    computed: dict
    expected: str
    status: str
    documented_exception: bool = False
    note: str = ""
    timestamp: object = None  # kept None so ledgers are byte-reproducible

    def to_dict(self):
        d = asdict(self)
        d["inputs"] = _jsonable(d["inputs"])
        d["computed"] = _jsonable(d["computed"])
        return d


@dataclass
class ConstantEstimate:
    """Truncated Euler product / series value with a tail estimate."""

    value: float
    truncation_prime: int
    tail_estimate: float
    reference_value: float = None
    converged: bool = False
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "value": self.value,
            "truncation_prime": self.truncation_prime,
            "tail_estimate": self.tail_estimate,
            "reference_value": self.reference_value,
            "converged": self.converged,
            "detail": _jsonable(self.detail),
        }


@dataclass
class SummatoryCurve:
    """(x, value) samples of a summatory function on a geometric grid."""

    points: list  # [(x, value)]
    exponent_fit: float = None

    @classmethod
    def from_points(cls, points):
        xs = [x for x, _ in points]
        if sorted(xs) != xs or len(set(xs)) != len(xs):
            raise ValueError("curve x values must be strictly increasing")
        fit = None
        if len(points) >= 4 and all(v != 0 for _, v in points):
            logs_x = [math.log(x) for x, _ in points]
            logs_v = [math.log(abs(v)) for _, v in points]
            n = len(points)
            mx = sum(logs_x) / n
            mv = sum(logs_v) / n
            denom = sum((lx - mx) ** 2 for lx in logs_x)
            if denom > 0:
                fit = sum((lx - mx) * (lv - mv) for lx, lv in zip(logs_x, logs_v)) / denom
        return cls(points=points, exponent_fit=fit)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return repr(obj)
        return obj
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    if hasattr(obj, "item"):  # numpy scalar
        return _jsonable(obj.item())
    return repr(obj)


def dump_json(obj, fh):
    json.dump(obj, fh, indent=2, sort_keys=True)
    fh.write("\n")
