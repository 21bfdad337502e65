# pylint: disable='missing-module-docstring
from setuptools import setup

with open('README.md', encoding='utf-8') as readme:
    setup(
        name='pomset-learner',
        version='1.0.0',
        author='InkBridge Networks',

        package_dir={'': 'src'},
        packages=['pomset_learner', 'pomset_learner.parsers',
                  'pomset_learner.teachers'],
        package_data={'pomset_learner': ['samples/*.json',
                                         'templates/*.j2']},
        include_package_data=True,

        description='Learns pomset recognisers from membership and '
                    'equivalence queries.',
        long_description=readme.read(),
        long_description_content_type='text/markdown',

        install_requires=[
            'Jinja2',
            'MarkupSafe',
            'pyyaml'
        ],
        entry_points={
            'console_scripts': [
                'pomset-learner = pomset_learner.__main__:main',
            ],
        },
    )
