from setuptools import setup

dependencies = [
    'click>=8.0',
    'colorama>=0.4.4',
    'Jinja2>=3.0',
    'PyYAML>=5.4',
    'sympy>=1.12',
]

setup(
    name="twyla.epwlattice",
    version="0.1.0",
    author="Twyla Devs",
    author_email="dev@twylahelps.com",
    description=("Exact lattice and Pell computations for double EPW sextic "
                 "families"),
    install_requires=dependencies,
    extras_require={
        'test': ['pytest', 'pytest-cov', 'hypothesis'],
    },
    packages=["twyla.epwlattice"],
    python_requires=">=3.8",
    entry_points={
        'console_scripts': [
            'epwlattice = twyla.epwlattice:main'
        ]
    },
)
