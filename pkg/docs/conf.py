"""
Sphinx configuration of the painleve-tau API documentation
"""
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

project = "painleve-tau"
# pylint: disable=redefined-builtin
copyright = "2026, painleve-tau developers"
author = "painleve-tau developers"
release = "0.1.0"

# napoleon reads the Google-style docstrings
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]
try:
    # pylint: disable=unused-import
    import sphinxcontrib.spelling

    extensions += ["sphinxcontrib.spelling"]
except ImportError:
    pass

autodoc_member_order = "bysource"
templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
