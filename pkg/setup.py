#!/usr/bin/env python
"""
charloci computes cohomology jump loci, Mellin transforms, perverse coherent
t-structures and intersection complexes on character tori with exact
arithmetic. It runs on Python 3.6 and later.

"""
import os
from setuptools import setup

cwd = os.path.dirname(os.path.abspath(__file__))

long_description = open(os.path.join(cwd, 'README.rst'), 'r').read()

setup(name='charloci',
      version='0.1.0',
      description='Exact jump loci and perverse coherent sheaves on '
                  'character tori.',
      long_description=long_description,
      license='MPL',
      packages=[
          'charloci',
          'charloci.algebra',
      ],
      package_data={
          'charloci': ['data/*.json'],
      },
      install_requires=[
          'sympy>=1.5',
      ],
      entry_points={
          'console_scripts': [
              'charloci=charloci.cli:main',
          ],
      },
      python_requires='>=3.6',
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3.6',
          'Programming Language :: Python :: 3.7',
          'Programming Language :: Python :: 3.8',
          'Topic :: Scientific/Engineering :: Mathematics',
      ])
