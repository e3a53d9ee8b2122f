"""
Module containing all the supported export functions
"""
from painleve_tau.export.csv_export import export_to_csv
from painleve_tau.export.json_export import export_to_json

EXPORT_FORMATS = {
    "csv": export_to_csv,
    "json": export_to_json,
}
