# Sphinx configuration for the SemiflowNet documentation.

import sphinx_bootstrap_theme

project = 'SemiflowNet'
copyright = '2026, Creators of SemiflowNet'
author = 'Creators of SemiflowNet'
release = '0.1.0'

# Formulas in the semiflow and reachability pages
extensions = ['sphinx.ext.mathjax']
master_doc = 'index'
language = 'en'

html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
html_theme_options = {
    'navbar_title': "SemiflowNet",
    'navbar_site_name': "Docs",
    'navbar_sidebarrel': False,
    'navbar_pagenav': False,
    'bootswatch_theme': "sandstone"
}
