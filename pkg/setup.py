# -*- coding: utf-8 -*-
from setuptools import setup

packages = \
['torweyl',
 'torweyl.data',
 'torweyl.inference',
 'torweyl.linalg',
 'torweyl.models']

package_data = \
{'': ['*']}

install_requires = \
['absl-py>=1.0.0,<2.0.0',
 'numpy>=1.21,<2.0',
 'sympy>=1.14,<2.0']

entry_points = \
{'console_scripts': ['torweyl = torweyl.cli:main']}

setup_kwargs = {
    'name': 'torweyl',
    'version': '0.1.0',
    'description': 'Exact decisions on finite dimensional modules of invariant differential operators of torus actions',
    'long_description': '# TorWeyl\n\nExact integer and rational algorithms deciding whether the algebra of\ntorus invariant differential operators on an affine space times a torus\nhas enough finite dimensional simple modules, with certificates.\n',
    'author': 'The TorWeyl Authors',
    'author_email': 'no-reply@torweyl.invalid',
    'maintainer': None,
    'maintainer_email': None,
    'url': None,
    'packages': packages,
    'package_data': package_data,
    'install_requires': install_requires,
    'entry_points': entry_points,
    'python_requires': '>=3.9,<4.0',
}


setup(**setup_kwargs)
