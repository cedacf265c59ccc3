# -*- coding: utf-8 -*-
#
# homhopf documentation build configuration file.

import sys, os

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

import homhopf

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosummary']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'homhopf'
copyright = '2026, The homhopf developers'

version = homhopf.__version__
release = homhopf.__version__

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'nature'
html_static_path = ['_static']
htmlhelp_basename = 'homhopfdoc'

latex_documents = [
  ('index', 'homhopf.tex', 'homhopf Documentation',
   'The homhopf developers', 'manual'),
]

man_pages = [
    ('index', 'homhopf', 'homhopf Documentation',
     ['The homhopf developers'], 1)
]
