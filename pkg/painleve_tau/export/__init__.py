"""
Init module
"""
from .all_export import EXPORT_FORMATS
from .json_export import write_json
from .table import Table
