"""
CSV export: header row, %.12e floats, JSON sidecar for the metadata
"""
import csv
import logging
from typing import Any, List

from painleve_tau.export.json_export import export_metadata
from painleve_tau.export.table import Table, format_cell
from painleve_tau.utils.naming import export_path

LOGGER = logging.getLogger("PainleveTau")


def export_to_csv(table: Table, **kwargs: Any) -> List[str]:
    """Write the table as CSV

    Args:
        table (Table): table to export
        **kwargs: optional arguments. Used: "export_dir"

    Returns:
        List[str]: List of files generated
    """
    path = export_path(table.name, "csv", **kwargs)
    with open(path, "w", encoding="utf8", newline="") as file_desc:
        writer = csv.writer(file_desc, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([format_cell(value) for value in row])
    LOGGER.info("Wrote %s", path)
    generated = [str(path)]
    if table.metadata:
        generated += export_metadata(table, **kwargs)
    return generated
