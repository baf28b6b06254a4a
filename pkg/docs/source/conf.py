# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
import datetime

from foldkappa.version import VERSION

sys.path.insert(0, os.path.abspath('.'))
year = datetime.datetime.now().year


# -- Project information -----------------------------------------------------

project = u'FoldKappa'
copyright = u'2024-{0}, FoldKappa developers'.format(year)
author = u'FoldKappa developers'

# The short X.Y version
version = '.'.join(VERSION.split('.')[:2])
# The full version, including alpha/beta/rc tags
release = VERSION


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinx.ext.todo',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
autodoc_default_flags = ['members']
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_title = 'FoldKappa {0} Documentation'.format(VERSION)
html_show_sourcelink = True
htmlhelp_basename = 'FoldKappadoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'FoldKappa.tex', u'FoldKappa Documentation', author, 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'foldkappa', u'FoldKappa Documentation', [author], 1)
]


# -- Options for Texinfo output ----------------------------------------------

texinfo_documents = [
    (master_doc, 'FoldKappa', u'FoldKappa Documentation', author, 'FoldKappa',
     'Component connectivity of hypercubes and folded hypercubes', 'Miscellaneous'),
]

epub_title = project
epub_exclude_files = ['search.html']
