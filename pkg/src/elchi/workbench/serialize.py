"""JSON, CSV and text rendering of scalars, elements and reports.

JSON output uses sorted keys and canonical rationals, so equal inputs give
byte-identical text.  Timings are deliberately never serialized.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Dict, Iterable, List

from ..classical import CommutativePoly
from ..envalg import UElement
from ..funalg import FElement
from ..qplane import PlaneElement, PochBasisElement
from ..report import Discrepancy, EigenReport, LimitReport, VerificationReport
from ..scalar import GaussianRational, ParamScalar
from ..sparse import SparseElement, TensorElement

__all__ = ["to_jsonable", "emit_json", "emit_csv", "emit_text", "KEY_FIELDS"]

KEY_FIELDS = {
    FElement: ("l", "m", "n"),
    UElement: ("p1", "p2", "e", "j"),
    PlaneElement: ("chi", "chibar"),
    CommutativePoly: ("x", "xbar"),
}


def _scalar(s: ParamScalar) -> List[Dict[str, Any]]:
    out = []
    for (ez, ehp, ehm, ek), c in sorted(s.terms.items()):
        out.append({"re": str(c.re), "im": str(c.im), "z": ez, "hp": ehp, "hm": ehm, "k": ek})
    return out


def _key_fields(elem: SparseElement):
    for cls, fields in KEY_FIELDS.items():
        if isinstance(elem, cls):
            return fields
    return None


def _element(elem: SparseElement) -> List[Dict[str, Any]]:
    fields = _key_fields(elem)
    out = []
    for key, c in sorted(elem.terms.items()):
        if fields is not None:
            row = dict(zip(fields, (int(v) for v in key)))
        elif isinstance(elem, TensorElement):
            row = {"left": to_jsonable(key[0]), "right": to_jsonable(key[1])}
        else:
            row = {"key": to_jsonable(key)}
        row["coeff"] = _scalar(c)
        out.append(row)
    return out


def _discrepancy(d: Discrepancy) -> Dict[str, Any]:
    return {
        "key": to_jsonable(d.key),
        "expected": to_jsonable(d.expected),
        "actual": to_jsonable(d.actual),
        "difference": to_jsonable(d.difference),
        "note": d.note,
    }


def _report(r: VerificationReport) -> Dict[str, Any]:
    out = {
        "identity": r.identity,
        "window": to_jsonable(r.window),
        "pass": r.passed,
        "checked": r.checked,
        "informational": r.informational,
        "details": to_jsonable(r.details),
        "discrepancies": [_discrepancy(d) for d in r.discrepancies],
    }
    if isinstance(r, EigenReport):
        out["eigenvalue"] = to_jsonable(r.eigenvalue)
    if isinstance(r, LimitReport):
        out["order"] = r.order
    return out


def to_jsonable(value: Any) -> Any:
    """Convert any workbench value into plain JSON data."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, GaussianRational):
        return _scalar(ParamScalar.const(value))
    if isinstance(value, ParamScalar):
        return _scalar(value)
    if isinstance(value, SparseElement):
        return _element(value)
    if isinstance(value, VerificationReport):
        return _report(value)
    if isinstance(value, PochBasisElement):
        return {"family": value.family, "ell": value.ell, "r": value.r}
    if isinstance(value, dict):
        return {_dict_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (tuple, list)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=lambda v: json.dumps(v, sort_keys=True))
    return str(value)


def _dict_key(k) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def emit_json(value: Any) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _reports(value) -> List[VerificationReport]:
    if isinstance(value, VerificationReport):
        return [value]
    if isinstance(value, dict) and "reports" in value:
        return list(value["reports"])
    if isinstance(value, (list, tuple)) and all(isinstance(v, VerificationReport) for v in value):
        return list(value)
    return []


def emit_csv(value: Any) -> str:
    """Coefficient table for elements, one discrepancy per row for reports."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(value, SparseElement) and not isinstance(value, TensorElement):
        fields = _key_fields(value) or ("key",)
        w.writerow(list(fields) + ["coeff"])
        for key, c in sorted(value.terms.items()):
            w.writerow(list(key if _key_fields(value) else [key]) + [str(c)])
        return buf.getvalue()
    if isinstance(value, ParamScalar):
        w.writerow(["re", "im", "z", "hp", "hm", "k"])
        for row in _scalar(value):
            w.writerow([row[f] for f in ("re", "im", "z", "hp", "hm", "k")])
        return buf.getvalue()
    reports = _reports(value)
    if reports:
        w.writerow(["identity", "pass", "informational", "checked", "key", "expected", "actual", "note"])
        for r in reports:
            if not r.discrepancies:
                w.writerow([r.identity, r.passed, r.informational, r.checked, "", "", "", ""])
            for d in r.discrepancies:
                w.writerow([r.identity, r.passed, r.informational, r.checked, text_key(d.key),
                            _text(d.expected), _text(d.actual), d.note])
        return buf.getvalue()
    if isinstance(value, dict) and "terms" in value:
        # coordinate maps such as Pochhammer-basis expansions
        w.writerow(["key", "coeff"])
        for k, c in value["terms"]:
            w.writerow([text_key(k), str(c)])
        return buf.getvalue()
    w.writerow(["value"])
    w.writerow([str(value)])
    return buf.getvalue()


def _text(v) -> str:
    return "" if v is None else str(v)


def text_key(k) -> str:
    if isinstance(k, PochBasisElement):
        return f"rho_{k.ell}*({k.family})_{k.r}"
    if isinstance(k, tuple):
        return "(" + ", ".join(text_key(x) for x in k) + ")"
    return str(k)


def emit_text(value: Any, verbose: int = 3) -> str:
    reports = _reports(value)
    if reports:
        lines = []
        for r in reports:
            lines.append(r.summary())
            for d in r.discrepancies[:verbose]:
                lines.append(f"    at {text_key(d.key)}: expected {_text(d.expected)}, got {_text(d.actual)}"
                             + (f" ({d.note})" if d.note else ""))
            for k, v in sorted(r.details.items(), key=lambda kv: str(kv[0])):
                lines.append(f"    {k}: {v}")
        return "\n".join(lines) + "\n"
    return str(value) + "\n"


def render(value: Any, fmt: str) -> str:
    if fmt == "json":
        return emit_json(value)
    if fmt == "csv":
        return emit_csv(value)
    if fmt == "text":
        return emit_text(value)
    raise ValueError(f"unknown format {fmt!r}")


def iter_reports(value) -> Iterable[VerificationReport]:
    return iter(_reports(value))
