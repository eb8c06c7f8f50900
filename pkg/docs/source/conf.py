# type: ignore
# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
from typing import Any, List

sys.path.insert(0, os.path.abspath("../.."))

from fixpoint import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = "fixpoint"
copyright = "fixpoint authors"
author = "fixpoint authors"

# The full version, including alpha/beta/rc tags
release = __version__


# -- General configuration ---------------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.autosectionlabel"]

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns: List[Any] = []

autodoc_member_order = "bysource"


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
