from setuptools import setup, find_packages

setup(
    name="artin-groups",
    version="0.1.0",
    description="Spherical Artin groups: classification, Garside normal forms, the word problem and isomorphism invariants",
    author="Artin Groups Engine",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "python-dotenv>=1.0.0",
        "pyyaml>=6.0",
        "click>=8.2.0",
        "rich>=13.0.0",
        "networkx>=3.0",
        "tqdm>=4.66.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "black>=22.0.0",
            "flake8>=4.0.0",
            "sympy>=1.12",
        ],
    },
    entry_points={
        "console_scripts": [
            "artin=artin_groups.cli.artin:main",
        ],
    },
)
