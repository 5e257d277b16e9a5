#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# exdom documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import datetime
import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import exdom  # noqa

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'cliff.sphinxext']
autoprogram_cliff_application = 'exdom'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'exdom'
copyright = f'2021-{ datetime.datetime.today().year }, exdom developers'

# The short X.Y version.
version = exdom.__version__
# The full version, including alpha/beta/rc tags.
release = exdom.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'exdomdoc'

# -- Options for LaTeX output ------------------------------------------

latex_elements = {}

latex_documents = [
    ('index', 'exdom.tex',
     u'exdom Documentation',
     u'exdom developers', 'manual'),
]

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'exdom',
     u'exdom Documentation',
     [u'exdom developers'], 1)
]

# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    ('index', 'exdom',
     u'exdom Documentation',
     u'exdom developers',
     'exdom',
     'Extended-domain moving boundary tumour growth solver.',
     'Miscellaneous'),
]
