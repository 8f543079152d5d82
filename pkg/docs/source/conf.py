# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------
import datetime
import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

import skewtools  # noqa: E402

# -- Project information -----------------------------------------------------

current_year = datetime.datetime.now().year
project = 'skewtools'
copyright = f'{current_year}, skewtools developers'
author = 'skewtools developers'

# The full version, including alpha/beta/rc tags
version = getattr(skewtools, '__version__', 'dev')

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinxcontrib.napoleon',
    'sphinx.ext.imgmath',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.viewcode',
]

autosummary_generate = True

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

exclude_patterns = ['build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'
source_suffix = '.rst'
master_doc = 'index'

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {'style_nav_header_background': '#fcfcfc'}

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'galois': ('https://galois.readthedocs.io/en/stable/', None),
}
