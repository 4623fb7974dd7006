# -*- coding: utf-8 -*-
#
# steiner-ecc documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath(".."))

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.doctest",
]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

project = "steiner-ecc"
copyright = "2026, steiner-ecc Authors"

# The full version, including alpha/beta/rc tags.
release = __import__("steiner_ecc").__version__
# The short X.Y version.
version = ".".join(release.split(".")[:2])

exclude_patterns = ["_build"]

pygments_style = "sphinx"

todo_include_todos = True

autodoc_member_order = "bysource"

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    "show_related": True,
    "page_width": "1000px",
    "sidebar_width": "260px",
}

html_sidebars = {
    "**": [
        "about.html",
        "navigation.html",
        "relations.html",
        "searchbox.html",
    ]
}

htmlhelp_basename = "steiner-eccdoc"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "flask": ("https://flask.palletsprojects.com/en/2.3.x/", None),
    "click": ("https://click.palletsprojects.com/en/8.1.x/", None),
    "jsonschema": ("https://python-jsonschema.readthedocs.io/en/stable/", None),
}
