from setuptools import setup, find_packages
import os

# Reading the version from a file to avoid importing the package itself
here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'VERSION')) as version_file:
    version = version_file.read().strip()

# Reading the long description from README.md
with open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='hopfimage',
    version=version,
    description='Inner faithfulness checks for matrix models of compact quantum groups',
    long_description=long_description,
    long_description_content_type='text/markdown',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],

    keywords='quantum groups magic unitary Hadamard Weingarten inner faithfulness',

    packages=find_packages(where='src', exclude=['contrib', 'docs', 'tests']),

    package_dir={'': 'src'},

    python_requires='>=3.8, <4',

    install_requires=[
        'click',
        'pyyaml',
        'pydantic>=1.10,<2',
        'tqdm',
        'pandas>=1.5',
        'zstandard',
        'numpy',
        'scipy',
    ],

    extras_require={
        'test': ['pytest'],
    },

    entry_points={
        'console_scripts': [
            'hopfimage=hopfimage.cli:hopfimage',
        ],
    },
)
