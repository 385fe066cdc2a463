# Sphinx configuration of the charloci documentation.
import sys
import os

# Make the package importable for autodoc.
sys.path.insert(0, os.path.abspath('../../'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'charloci'
copyright = '2026, the charloci developers'
author = 'the charloci developers'
version = '0.1'
release = '0.1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'charlocidoc'

latex_documents = [
    (master_doc, 'charloci.tex', 'charloci Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'charloci', 'charloci Documentation', [author], 1)
]

autodoc_member_order = 'bysource'
