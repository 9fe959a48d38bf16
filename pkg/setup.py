import setuptools

with open('README.md', 'r') as readme:
    long_description = readme.read()

setuptools.setup(
    name='ultranev',
    version='0.1.0',
    author='ultranev developers',
    description='Exact non-archimedean Nevanlinna bookkeeping and verdicts '
                'for rational functional equations P(f)=Q(g)',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(exclude=['tests']),
    package_data={
        'ultranev': ['config/*.json', 'fixtures/*.json'],
    },
    classifiers=[
        'Programming Language :: Python :: 3.8',
        'License :: OSI Approved :: Apache Software License',
    ],
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'sympy>=1.11',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'ultranev=ultranev.cli.main:main',
        ],
    },
)
