"""
Tabular result shared by the exporters
"""
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

FLOAT_FORMAT = "%.12e"


@dataclass
class Table:
    """
    Named table with ordered columns and a metadata dictionary
    """

    name: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_columns(
        cls, name: str, data: Dict[str, Sequence[Any]], metadata: Optional[Dict[str, Any]] = None
    ) -> "Table":
        """Build a table from equally long columns, keeping their insertion order

        Args:
            name (str): file stem
            data (Dict[str, Sequence[Any]]): column name to values
            metadata (Optional[Dict[str, Any]]): sidecar information

        Raises:
            ValueError: if the columns differ in length

        Returns:
            Table: the table
        """
        lengths = {len(values) for values in data.values()}
        if len(lengths) > 1:
            raise ValueError(f"Columns of {name} differ in length: {sorted(lengths)}")
        rows = [list(row) for row in zip(*data.values())]
        return cls(name, list(data), rows, dict(metadata or {}))

    def column(self, name: str) -> List[Any]:
        """Values of one column

        Args:
            name (str): column name

        Returns:
            List[Any]: the values
        """
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def format_cell(value: Any) -> str:
    """Text of one CSV cell: %.12e for floats, empty for None

    Args:
        value (Any): cell value

    Returns:
        str: formatted value
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return "nan"
        return FLOAT_FORMAT % float(value)
    return str(value)


def to_jsonable(value: Any) -> Any:
    """Convert numpy and complex values into JSON types, complex as [re, im]

    Args:
        value (Any): value

    Returns:
        Any: JSON-compatible value
    """
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(item) for item in list(value)]
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value
