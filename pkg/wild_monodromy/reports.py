"""
Reports tie every computed value to the claim it checks.

A claim is {"id", "anchor", "computed", "expected", "status"}: anchor is a
stable statement of the identity being checked and status is one of
"match", "mismatch" or "unverified-advisory".
"""

import json
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from .filtration import LOWER
from .tower.element import Valuation

MATCH = "match"
MISMATCH = "mismatch"
ADVISORY = "unverified-advisory"

STATUSES = (MATCH, MISMATCH, ADVISORY)

REPORT_VERSION = 1


class ReportEncoder(DjangoJSONEncoder):
    """Encode exact rationals as integers or "a/b" strings."""

    def default(self, o):
        if isinstance(o, Valuation):
            o = o.value
        if isinstance(o, Fraction):
            return o.numerator if o.denominator == 1 else str(o)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if isinstance(o, tuple):
            return list(o)
        return super().default(o)


def _plain(value):
    """Canonical JSON-compatible copy of value."""
    return json.loads(json.dumps(value, cls=ReportEncoder, sort_keys=True))


class Claim:
    def __init__(self, claim_id, anchor, computed, expected=None, status=MATCH):
        if status not in STATUSES:
            raise ValueError(f"Unknown claim status {status!r}.")
        self.id = claim_id
        self.anchor = anchor
        self.computed = computed
        self.expected = expected
        self.status = status

    def __repr__(self):
        return f"<Claim {self.id}: {self.status}>"

    def as_dict(self):
        return {
            "id": self.id,
            "anchor": self.anchor,
            "computed": _plain(self.computed),
            "expected": _plain(self.expected),
            "status": self.status,
        }


class Report:
    def __init__(self, kind, scenario=None):
        self.kind = kind
        self.scenario = scenario or {}
        self.claims = []
        self.notes = []
        self.timings = []

    def __repr__(self):
        return f"<Report {self.kind}: {len(self.claims)} claims>"

    def __getitem__(self, claim_id):
        for claim in self.claims:
            if claim.id == claim_id:
                return claim
        raise KeyError(claim_id)

    def __contains__(self, claim_id):
        return any(claim.id == claim_id for claim in self.claims)

    def check(self, claim_id, anchor, computed, expected):
        """Record a claim with a pinned expected value."""
        status = MATCH if _plain(computed) == _plain(expected) else MISMATCH
        claim = Claim(claim_id, anchor, computed, expected, status)
        self.claims.append(claim)
        return claim

    def record(self, claim_id, anchor, computed, status=MATCH):
        """Record a claim verified by the computation itself."""
        claim = Claim(claim_id, anchor, computed, None, status)
        self.claims.append(claim)
        return claim

    def advisory(self, claim_id, anchor, computed, expected=None):
        claim = Claim(claim_id, anchor, computed, expected, ADVISORY)
        self.claims.append(claim)
        return claim

    def mismatch(self, claim_id, anchor, error):
        return self.record(claim_id, anchor, {"error": str(error)}, MISMATCH)

    def note(self, text):
        self.notes.append(text)

    @property
    def has_mismatch(self):
        return any(claim.status == MISMATCH for claim in self.claims)

    def value(self, claim_id):
        return self[claim_id].computed

    def as_dict(self, timings=False):
        data = {
            "version": REPORT_VERSION,
            "kind": self.kind,
            "scenario": _plain(self.scenario),
            "claims": [claim.as_dict() for claim in self.claims],
            "notes": list(self.notes),
            "status": MISMATCH if self.has_mismatch else MATCH,
        }
        # Durations vary from run to run; leave them out of the default output.
        if timings:
            data["timings"] = list(self.timings)
        return data

    def to_json(self, timings=False):
        return json.dumps(self.as_dict(timings), cls=ReportEncoder, indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        version = data.get("version")
        if version != REPORT_VERSION:
            raise ValueError(f"Unsupported report version {version!r}.")
        report = cls(data["kind"], data.get("scenario"))
        for item in data["claims"]:
            report.claims.append(
                Claim(
                    item["id"],
                    item["anchor"],
                    item["computed"],
                    item.get("expected"),
                    item["status"],
                )
            )
        report.notes = list(data.get("notes", []))
        report.timings = list(data.get("timings", []))
        return report

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _format_value(value):
    if isinstance(value, dict):
        return ", ".join(f"{k}={_format_value(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def render_filtration_table(mode, breaks):
    """One row per index range, as filtrations are usually tabulated."""
    rows = []
    previous = Fraction(-1)
    symbol = "G_i" if mode == LOWER else "G^u"
    variable = "i" if mode == LOWER else "u"
    for b, label, order in breaks:
        if previous == -1:
            rows.append(f"  {symbol} = {label:<12} order {order:<6} for -1 <= {variable} <= {b}")
        else:
            rows.append(
                f"  {symbol} = {label:<12} order {order:<6} for {previous} < {variable} <= {b}"
            )
        previous = b
    rows.append(f"  {symbol} = {'1':<12} order {1:<6} for {previous} < {variable}")
    return "\n".join(rows)


def render_text(report):
    lines = [f"{report.kind} report (version {REPORT_VERSION})"]
    if report.scenario:
        lines.append(f"scenario: {_format_value(report.scenario)}")
    width = max((len(claim.id) for claim in report.claims), default=0)
    for claim in report.claims:
        line = f"[{claim.status:>19}] {claim.id:<{width}}  {_format_value(claim.computed)}"
        if claim.expected is not None:
            line += f"  (expected {_format_value(claim.expected)})"
        lines.append(line)
        lines.append(f"{'':>22}{claim.anchor}")
        if isinstance(claim.computed, dict) and {"mode", "breaks"} <= claim.computed.keys():
            lines.append(
                render_filtration_table(claim.computed["mode"], claim.computed["breaks"])
            )
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"status: {MISMATCH if report.has_mismatch else MATCH}")
    return "\n".join(lines)
