"""
Module handling the naming of the exported files
"""
import os
from pathlib import Path
from typing import Any, Optional

EXPORT_DIR_ENV = "PAINLEVE_TAU_EXPORT_DIR"
DEFAULT_EXPORT_DIR = "painleve-export"


def default_export_dir() -> str:
    """Export directory used when --export-dir is not given

    Returns:
        str: $PAINLEVE_TAU_EXPORT_DIR, or painleve-export
    """
    return os.environ.get(EXPORT_DIR_ENV, DEFAULT_EXPORT_DIR)


def export_path(name: str, extension: str, **kwargs: Any) -> Path:
    """Path of an exported file, creating the export directory when missing

    Args:
        name (str): file stem
        extension (str): extension without the dot
        **kwargs: optional arguments. Used: "export_dir"

    Returns:
        Path: export_dir/name.extension
    """
    export_dir = kwargs.get("export_dir") or default_export_dir()
    if not os.path.exists(export_dir):
        os.makedirs(export_dir)
    return Path(export_dir, f"{name}.{extension}")


def format_number(value: float) -> str:
    """Short text form of a parameter inside a file name

    Args:
        value (float): parameter

    Returns:
        str: e.g. 0.5 -> "0.5", -1.0 -> "m1"
    """
    text = f"{value:g}"
    return text.replace("-", "m")


def stem_with_suffix(stem: str, suffix: Optional[str]) -> str:
    """Join a stem and an optional suffix with an underscore

    Args:
        stem (str): base name
        suffix (Optional[str]): suffix, ignored when empty

    Returns:
        str: stem_suffix or stem
    """
    if not suffix:
        return stem
    return f"{stem}_{suffix}"
