"""Matrix files and family scans.

A matrix file is a JSON document::

    {
      "dims": [2, 2],
      "kind": "state",
      "base": "nats",
      "data": [[re, im], ...]
    }

``data`` holds ``(dA*dB)**2`` entries in row-major order. ``base`` is
optional. Numbers are written with 17 significant digits so that a
save/load round trip is exact.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .entropy import conditional_entropy
from .errors import DimensionMismatch, ParseError
from .linalg import LogBase
from .states import DensityMatrix, isotropic, werner
from .witness import HermitianOperator, eval_witness

__all__ = [
    "MatrixFile",
    "ScanRow",
    "dumps_matrix",
    "loads_matrix",
    "load_matrix",
    "save_matrix",
    "scan_family",
    "write_scan_csv",
    "family_range",
]

KINDS = ("state", "operator")


def _num(x: float) -> str:
    s = format(float(x), ".17g")
    if s in ("nan", "inf", "-inf"):
        raise ValueError(f"cannot serialise non-finite value {x}")
    return s


@dataclass(frozen=True, eq=False)
class MatrixFile:
    dims: tuple[int, int]
    kind: str
    data: np.ndarray
    base: LogBase | None = None

    def state(self) -> DensityMatrix:
        return DensityMatrix(self.data, self.dims)

    def operator(self) -> HermitianOperator:
        kind = "log" if self.base is not None else "operator"
        return HermitianOperator(self.data, self.dims, self.base, kind)

    def value(self):
        return self.state() if self.kind == "state" else self.operator()

    @classmethod
    def from_object(cls, obj) -> "MatrixFile":
        if isinstance(obj, MatrixFile):
            return obj
        if isinstance(obj, DensityMatrix):
            return cls(obj.dims, "state", np.asarray(obj.matrix))
        if isinstance(obj, HermitianOperator):
            return cls(obj.dims, "operator", np.asarray(obj.matrix), obj.base)
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps_matrix(obj) -> str:
    mf = MatrixFile.from_object(obj)
    lines = ["{", f'  "dims": [{mf.dims[0]}, {mf.dims[1]}],', f'  "kind": "{mf.kind}",']
    if mf.base is not None:
        lines.append(f'  "base": "{mf.base.value}",')
    flat = np.asarray(mf.data, dtype=complex).ravel()
    rows = [f"    [{_num(z.real)}, {_num(z.imag)}]" for z in flat]
    lines.append('  "data": [')
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_matrix(text: str, validate: bool = True) -> MatrixFile:
    """Parse a matrix document; states and operators are validated on load."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("dims", "kind", "data"):
        if key not in doc:
            raise ParseError("missing required field", field=key)
    dims = doc["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) and not isinstance(d, bool) and d > 0 for d in dims)
    ):
        raise ParseError("dims must be two positive integers", field="dims")
    kind = doc["kind"]
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {KINDS}", field="kind")
    base = doc.get("base")
    if base is not None:
        try:
            base = LogBase.parse(base)
        except ValueError as exc:
            raise ParseError(str(exc), field="base") from None
    data = doc["data"]
    n = dims[0] * dims[1]
    if not isinstance(data, list) or len(data) != n * n:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise ParseError(f"expected {n * n} entries, got {got}", field="data")
    values = np.empty(n * n, dtype=complex)
    for i, pair in enumerate(data):
        ok = (
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        )
        if not ok:
            raise ParseError("entry must be a pair of numbers [re, im]", field=f"data[{i}]")
        values[i] = complex(pair[0], pair[1])
    mf = MatrixFile((dims[0], dims[1]), kind, values.reshape(n, n), base)
    if validate:
        mf.value()
    return mf


def load_matrix(path: str | os.PathLike, validate: bool = True) -> MatrixFile:
    with open(path, encoding="utf-8") as fh:
        return loads_matrix(fh.read(), validate)


def save_matrix(path: str | os.PathLike, obj) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_matrix(obj))


class ScanRow(NamedTuple):
    param: float
    witness_value: float
    cond_entropy: float


def family_range(family: str, d: int = 2) -> tuple[float, float]:
    if family == "werner":
        return 0.0, 1.0
    if family == "isotropic":
        return -1.0 / (d * d - 1), 1.0
    raise ValueError(f"unknown family {family!r}")


def family_state(family: str, param: float, d: int = 2) -> DensityMatrix:
    if family == "werner":
        return werner(param)
    return isotropic(param, d)


def scan_family(
    family: str,
    witness: HermitianOperator,
    points: int = 201,
    base: LogBase | str = LogBase.BITS,
    d: int | None = None,
) -> list[ScanRow]:
    """Evaluate ``Tr(W rho(param))`` and ``S(A|B)`` on a uniform grid.

    The grid includes both ends of the family's parameter range.
    """
    d = witness.dims[0] if d is None else d
    if family == "werner" and d != 2:
        raise DimensionMismatch("the Werner family is two-qubit only")
    if witness.dims != (d, d):
        raise DimensionMismatch(f"witness dims {witness.dims} do not match family dimension {d}")
    if points < 2:
        raise ValueError("a scan needs at least two points")
    lo, hi = family_range(family, d)
    rows = []
    for p in np.linspace(lo, hi, points):
        p = float(min(max(p, lo), hi))
        rho = family_state(family, p, d)
        rows.append(ScanRow(p, eval_witness(witness, rho), conditional_entropy(rho, "B", base)))
    return rows


def write_scan_csv(rows, out) -> None:
    """Write ``param,witness_value,cond_entropy`` rows to a path or text stream."""
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            write_scan_csv(rows, fh)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(ScanRow._fields)
    for r in rows:
        writer.writerow([_num(r.param), _num(r.witness_value), _num(r.cond_entropy)])
