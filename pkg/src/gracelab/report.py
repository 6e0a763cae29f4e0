"""Bit-stable serialisation of reports and single results."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Optional, Union

from .verify import VerificationReport


class ReportWriteError(OSError):
    pass


def to_json(obj, pretty: bool = True) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def to_csv(rows: list) -> str:
    columns = sorted({k for r in rows for k in r})
    if "f" in columns:
        columns.remove("f")
        columns.insert(0, "f")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def to_text(report: VerificationReport) -> str:
    lines = [
        f"lemma          {report.lemma}",
        f"n              {report.n}",
        f"verdict        {report.verdict}",
        f"domain_size    {report.domain_size}",
        f"checked        {report.checked}",
        f"premise_holds  {report.premise_holds}",
        f"counterexamples {len(report.counterexamples)}",
        f"flags          {len(report.flags)}",
    ]
    if report.sampling:
        lines.append(f"sampling       {to_json(report.sampling, pretty=False).strip()}")
    if report.witness is not None:
        lines.append(f"witness        {','.join(map(str, report.witness))}")
    for c in report.counterexamples:
        lines.append(f"  counterexample f={c['f']} {to_json(c['details'], pretty=False).strip()}")
    for fl in report.flags:
        lines.append(f"  flag f={fl['f']} {to_json(fl['details'], pretty=False).strip()}")
    return "\n".join(lines) + "\n"


def render(payload: Union[VerificationReport, dict], fmt: str = "json",
           include_timing: bool = False) -> str:
    if isinstance(payload, VerificationReport):
        if fmt == "json":
            return to_json(payload.to_dict(include_timing))
        if fmt == "csv":
            return to_csv(payload.instances)
        return to_text(payload)
    if fmt == "json":
        return to_json(payload, pretty=False)
    if fmt == "csv":
        rows = payload.get("rows") or [payload]
        return to_csv(rows)
    return "\n".join(f"{k}: {_cell(v)}" for k, v in sorted(payload.items())) + "\n"


def emit_report(payload, fmt: str = "json", path: Optional[str] = None, *,
                include_timing: bool = False, stream=None) -> str:
    """Serialise and write to ``path`` (or ``stream``); returns the text."""
    text = render(payload, fmt, include_timing)
    if path is None:
        if stream is not None:
            stream.write(text)
        return text
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ReportWriteError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return text
