
from setuptools import setup, find_packages
import sys, os

version = '0.1'

requirements = [
    'numpy',
    'scipy',
    'jinja2'
]

setup(
    name = 'fbmlocal',
    version = version,
    description = "Local independence of fractional Brownian motion: angles, mutual information and their scaling laws",
    packages = find_packages( exclude = [ 'ez_setup', 'examples', 'examples.*' ] ),
    package_data = { 'fbmlocal': [ 'templates/*.jinja2', 'templates/summary/*.jinja2' ] },
    include_package_data = True,
    zip_safe = False,
    author = 'the fbmlocal developers',
    license = 'GPL',
    dependency_links = [],
    install_requires = requirements,
    entry_points = {
        'console_scripts': [ 'fbmlocal = fbmlocal.cli:main' ]
    },
    test_suite = "fbmlocal.tests"
)
