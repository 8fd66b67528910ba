"""Result records: stable JSON documents, JSON lines and CSV rows."""

import csv
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

import numpy as np
from pydantic import BaseModel, Field

from .. import __version__


def jsonable(value: Any) -> Any:
    """Plain JSON types for payloads built from domain objects."""
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if hasattr(value, "to_list"):
        return jsonable(value.to_list())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    if isinstance(value, Enum):
        return value.value
    return value


class ResultRecord(BaseModel):
    """One CLI invocation's output document."""
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    outputs: Dict[str, Any] = Field(default_factory=dict)
    version: str = __version__

    @classmethod
    def build(cls, command: str, params: Dict[str, Any], outputs: Any) -> "ResultRecord":
        outputs = jsonable(outputs)
        if not isinstance(outputs, dict):
            outputs = {"value": outputs}
        return cls(command=command, params=jsonable(params), outputs=outputs)

    def to_json(self, indent: int = None) -> str:
        """Sorted keys and fixed separators: equal records give equal bytes."""
        separators = (",", ": ") if indent else (",", ":")
        return json.dumps(self.model_dump(), sort_keys=True, indent=indent, separators=separators, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls.model_validate_json(text)


def to_jsonl(rows: Iterable[Dict[str, Any]]) -> str:
    """One compact JSON object per line."""
    return "".join(json.dumps(jsonable(row), sort_keys=True, separators=(",", ":")) + "\n" for row in rows)


def to_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(jsonable(row))
    return buffer.getvalue()


def parse_csv(text: str) -> List[Dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))
