"""
JSON export, sorted keys and complex numbers as [re, im]
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from painleve_tau.export.table import Table, to_jsonable
from painleve_tau.utils.naming import export_path

LOGGER = logging.getLogger("PainleveTau")


def write_json(path: Path, content: Dict[str, Any]) -> str:
    """Write a dictionary deterministically

    Args:
        path (Path): destination
        content (Dict[str, Any]): data

    Returns:
        str: the path written
    """
    with open(path, "w", encoding="utf8") as file_desc:
        json.dump(to_jsonable(content), file_desc, sort_keys=True, indent=2)
        file_desc.write("\n")
    LOGGER.info("Wrote %s", path)
    return str(path)


def export_to_json(table: Table, **kwargs: Any) -> List[str]:
    """Write the table as one JSON document with its columns and metadata

    Args:
        table (Table): table to export
        **kwargs: optional arguments. Used: "export_dir"

    Returns:
        List[str]: List of files generated
    """
    content = {
        "name": table.name,
        "columns": table.columns,
        "rows": table.rows,
        "metadata": table.metadata,
    }
    return [write_json(export_path(table.name, "json", **kwargs), content)]


def export_metadata(table: Table, **kwargs: Any) -> List[str]:
    """Write the metadata sidecar of a table, name.meta.json

    Args:
        table (Table): table whose metadata is exported
        **kwargs: optional arguments. Used: "export_dir"

    Returns:
        List[str]: List of files generated
    """
    return [write_json(export_path(f"{table.name}.meta", "json", **kwargs), table.metadata)]
