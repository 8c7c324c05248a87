"""JSON and Matrix Market serialization, plus verification reports.

Matrix JSON::

    {"rows": R, "cols": C, "entries": [[re, im], ...],          # row-major
     "partition": {"row_blocks": [...], "col_blocks": [...]}}   # optional

Python's ``repr`` of a float is the shortest string that parses back to the
same double, so the JSON form is lossless.
"""

from __future__ import annotations

import datetime as _dt
import json
import math
import sys
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse

from . import __version__
from .entanglement import GateClassification
from .exceptions import PartitionError
from .linalg import as_matrix
from .products import BlockPartition, PartitionedMatrix
from .ybe import RMatrixCertificate


class FormatError(ValueError):
    """Malformed matrix, solution or report file."""


def matrix_to_json(m, partition: BlockPartition | None = None) -> dict:
    if isinstance(m, PartitionedMatrix):
        partition = partition or m.partition
        m = m.matrix
    m = as_matrix(m)
    data = {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "entries": [[float(z.real), float(z.imag)] for z in m.reshape(-1)],
    }
    if partition is not None:
        if partition.shape != m.shape:
            raise PartitionError(f"partition {partition.shape} does not fit {m.shape}")
        data["partition"] = {
            "row_blocks": list(partition.row_blocks),
            "col_blocks": list(partition.col_blocks),
        }
    return data


def matrix_from_json(data: dict) -> tuple[np.ndarray, BlockPartition | None]:
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"not a matrix document: {exc}") from None
    if rows < 1 or cols < 1:
        raise FormatError("rows and cols must be positive")
    if len(entries) != rows * cols:
        raise FormatError(f"expected {rows * cols} entries, found {len(entries)}")
    try:
        flat = np.array([complex(float(re), float(im)) for re, im in entries])
    except (TypeError, ValueError) as exc:
        raise FormatError(f"entries must be [re, im] pairs: {exc}") from None
    if not np.all(np.isfinite(flat)):
        raise FormatError("entries must be finite")
    m = flat.reshape(rows, cols)
    part = None
    if "partition" in data:
        p = data["partition"]
        try:
            part = BlockPartition(tuple(p["row_blocks"]), tuple(p["col_blocks"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad partition: {exc}") from None
        if part.shape != m.shape:
            raise FormatError(f"partition {part.shape} does not fit {m.shape}")
    return m, part


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def read_json(path) -> dict:
    """Parse JSON from ``path``; ``"-"`` reads standard input."""
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def write_text(text: str, path) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def write_matrix_market(m, path) -> None:
    """Coordinate complex general, 1-based, 17 significant digits."""
    m = as_matrix(m)
    scipy.io.mmwrite(
        str(path), scipy.sparse.coo_matrix(m), field="complex", precision=17, symmetry="general"
    )


def read_matrix_market(path) -> np.ndarray:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(path))
    if p.stat().st_size == 0:
        raise FormatError("empty Matrix Market file")
    try:
        data = scipy.io.mmread(str(p))
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed Matrix Market file: {exc}") from None
    m = data.toarray() if scipy.sparse.issparse(data) else np.asarray(data)
    return as_matrix(m)


def _amplitudes(v) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v).reshape(-1)]


def classification_checks(cls: GateClassification) -> dict:
    checks = {"verdict": cls.verdict, "is_gate": cls.is_gate}
    if cls.witness is not None:
        checks["witness"] = _amplitudes(cls.witness)
        checks["witness_image_rank"] = cls.witness_image_rank
    if cls.factors is not None:
        checks["factors"] = [matrix_to_json(f) for f in cls.factors]
        checks["with_swap"] = cls.with_swap
    return checks


def build_report(
    subject: dict,
    certificate: RMatrixCertificate | None = None,
    classification: GateClassification | None = None,
    seed: int = 0,
    notes: list[str] | None = None,
    timestamp: bool = False,
) -> dict:
    checks: dict = {"verdict": "n/a"}
    if certificate is not None:
        checks.update(
            ybe_residual=float(certificate.ybe_residual),
            unitary=bool(certificate.unitary),
            invertible=bool(certificate.invertible),
            r_matrix=bool(certificate.valid),
            tolerance=float(certificate.tolerance),
            verification=certificate.method,
        )
    if classification is not None:
        checks.update(classification_checks(classification))
    report = {
        "subject": subject,
        "checks": checks,
        "tool_version": __version__,
        "seed": int(seed),
    }
    if notes:
        report["notes"] = list(notes)
    if timestamp:
        report["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
    _check_finite(report)
    return report


def _check_finite(obj) -> None:
    if isinstance(obj, float) and not math.isfinite(obj):
        raise ValueError("report contains a non-finite number")
    if isinstance(obj, dict):
        for v in obj.values():
            _check_finite(v)
    elif isinstance(obj, list):
        for v in obj:
            _check_finite(v)


def strip_timestamp(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timestamp"}


def format_report(report: dict) -> str:
    """Short human-readable rendering of a report."""
    lines = [f"subject: {json.dumps(report['subject'])}"]
    checks = report["checks"]
    for key in ("ybe_residual", "verification", "unitary", "invertible", "r_matrix", "verdict"):
        if key in checks:
            lines.append(f"{key}: {checks[key]}")
    if "witness" in checks:
        amps = ", ".join(
            f"{i}:{complex(re, im):.6g}" for i, (re, im) in enumerate(checks["witness"]) if re or im
        )
        lines.append(f"witness (non-zero amplitudes): {amps}")
        lines.append(f"image Schmidt rank: {checks['witness_image_rank']}")
    if "factors" in checks:
        lines.append(f"factors ({'with swap' if checks['with_swap'] else 'no swap'}):")
        for f in checks["factors"]:
            m, _ = matrix_from_json(f)
            lines.append(np.array2string(np.real_if_close(m), precision=4, suppress_small=True))
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
