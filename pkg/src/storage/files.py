"""Reading and writing d.d.f., space and metric documents."""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Iterable, TypeVar

from loguru import logger
from pydantic import BaseModel, ValidationError

from ..ddf.core import DDF, H0
from ..ddf.triangle import TriangleFn, TriangleKind
from ..schemas.files import BreakpointModel, DdfFile, MetricFile, SpaceFile, TauSpec
from ..space.pmspace import PMSpace, validate
from ..utils.validation import FileFormatError, SpaceAxiomError

ModelT = TypeVar("ModelT", bound=BaseModel)

# significant digits of every number in a result document
OUTPUT_DIGITS = 9


def _read_model(path: str | Path, model: type[ModelT]) -> ModelT:
    path = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FileFormatError(path, "", f"cannot read file: {e.strerror or e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(path, f"line {e.lineno} column {e.colno}", e.msg) from e
    try:
        return model.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        message = error["msg"].removeprefix("Value error, ")
        raise FileFormatError(path, location, message) from e


def ddf_from_file(document: DdfFile) -> DDF:
    return DDF(tuple(b.x for b in document.breakpoints), tuple(b.v for b in document.breakpoints))


def ddf_to_file(F: DDF) -> DdfFile:
    return DdfFile(breakpoints=[BreakpointModel(x=x, v=v) for x, v in F.breakpoints])


def load_ddf(path: str | Path) -> DDF:
    """Load a canonical DDF.

    Raises:
        FileFormatError: On unreadable JSON or a breakpoint list violating the DDF invariants
    """
    return ddf_from_file(_read_model(path, DdfFile))


def save_ddf(path: str | Path, F: DDF) -> None:
    """Write F at full float precision; load_ddf reproduces it exactly."""
    Path(path).write_text(ddf_to_file(F).model_dump_json(indent=2) + "\n", encoding="utf-8")


def triangle_from_spec(spec: TauSpec) -> TriangleFn:
    if spec.kind == TriangleKind.CONVOLUTION.value:
        return TriangleFn.convolution()
    return TriangleFn.tau_t(spec.tnorm)


def space_from_file(document: SpaceFile) -> PMSpace:
    n = len(document.points)
    dist = tuple(
        tuple(H0 if i == j else ddf_from_file(document.pair_entry(i, j)) for j in range(n))
        for i in range(n)
    )
    return PMSpace(tuple(document.points), dist, triangle_from_spec(document.tau))


def space_to_file(space: PMSpace) -> SpaceFile:
    tau = TauSpec(kind=space.tau.kind.value, tnorm=space.tau.tnorm)
    dist = {
        f"{space.labels[i]},{space.labels[j]}": ddf_to_file(space.F(i, j))
        for i in range(space.size)
        for j in range(i + 1, space.size)
    }
    return SpaceFile(points=list(space.labels), tau=tau, dist=dist)


def read_space(path: str | Path) -> PMSpace:
    """Parse a space document without checking the PM axioms."""
    return space_from_file(_read_model(path, SpaceFile))


def load_space(path: str | Path, validate_axioms: bool = True) -> PMSpace:
    """Load a space document and check the PM axioms.

    With ``validate_axioms`` off an axiom failure is logged as a warning and
    the space is returned anyway.

    Raises:
        FileFormatError: On malformed documents (missing pair, duplicate label, ...)
        SpaceAxiomError: When the axioms fail and validation is on
    """
    space = read_space(path)
    report = validate(space)
    if not report.passed:
        witness = ", ".join(f"{w.label}={w.value}" for w in report.witnesses)
        if validate_axioms:
            raise SpaceAxiomError(f"{path}: axiom violation ({witness})", report)
        logger.warning(f"{path}: loaded despite axiom violation ({witness})")
    return space


def save_space(path: str | Path, space: PMSpace) -> None:
    Path(path).write_text(space_to_file(space).model_dump_json(indent=2) + "\n", encoding="utf-8")


def load_metric(path: str | Path) -> MetricFile:
    return _read_model(path, MetricFile)


def round_numbers(value: Any, digits: int = OUTPUT_DIGITS) -> Any:
    """Round every finite float in a JSON-compatible value to ``digits`` significant digits."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(f"{value:.{digits}g}") if math.isfinite(value) else value
    if isinstance(value, dict):
        return {key: round_numbers(item, digits) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_numbers(item, digits) for item in value]
    return value


def dump_document(document: Any) -> str:
    """Serialize a result document (a pydantic model or plain data) for standard output."""
    if isinstance(document, BaseModel):
        document = document.model_dump(mode="json")
    return json.dumps(round_numbers(document), indent=2)


def dump_csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    writer.writerows([round_numbers(list(row)) for row in rows])
    return buffer.getvalue()
