from setuptools import find_packages, setup

from foldkappa.version import VERSION


setup(name='foldkappa',
      version=VERSION,
      description='Component connectivity of hypercubes and folded hypercubes',
      packages=find_packages(exclude=['*.tests', '*.tests.*']),
      python_requires='>=3.8',
      install_requires=['click', 'networkx', 'numpy', 'pydantic', 'pyyaml'],
      entry_points={'console_scripts': ['foldkappa = foldkappa.app.cli:main']},
      )
