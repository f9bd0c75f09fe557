#!/usr/bin/env python

from setuptools import setup

setup(name='restheory',
      version='1.0',
      description='Monotones of finite universally combinable resource theories',
      packages=['restheory'],
      install_requires=[
          'networkx',
          'pydot',
      ],
      entry_points={
          'console_scripts': [
              'restheory=restheory.cli:main',
          ],
      },
     )
