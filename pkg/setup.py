'''powerresidues.'''
from setuptools import setup

with open('README.md', 'r') as fh:
    long_description = fh.read()

setup(
    name='powerresidues',
    description='powerresidues',
    version='0.1.0',
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=['powerresidues', 'powerresidues.cli'],
    install_requires=['pyyaml',
                      'sympy>=1.13'],
    entry_points={
        'console_scripts': [
           'power-residues = powerresidues.cli.power_residues:main',
        ]
    },
    test_suite='powerresidues.test',
)
