#!/usr/bin/env python3
"""
Setup script for dahaverify
Exact operator calculus and verification suites for cyclotomic DAHA
"""

import sys
from pathlib import Path

from setuptools import find_packages, setup

if sys.version_info < (3, 9):
    print("dahaverify requires Python 3.9 or higher")
    sys.exit(1)


def get_long_description():
    readme_file = Path(__file__).parent / "README.md"
    if readme_file.exists():
        return readme_file.read_text(encoding="utf-8")
    return ""


packages = find_packages(
    where=".",
    include=["dahaverify*"],
    exclude=["tests*", "examples*"],
)

setup(
    name="dahaverify",
    version="1.0.0",
    description="Exact operator calculus and machine verification for cyclotomic DAHA",
    long_description=get_long_description(),
    long_description_content_type="text/markdown",
    packages=packages,
    package_data={"dahaverify": ["ncverify/fixtures/*.json"]},
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=[
        "pyyaml>=6.0.0",
        "click>=8.1.0",
        "rich>=13.7.0",
        "pydantic>=2.0.0",
        "structlog>=23.2.0",
        "sympy>=1.12",
        "numpy>=1.24.0",
        "joblib>=1.3.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "black>=23.9.0",
            "flake8>=6.1.0",
            "isort>=5.12.0",
            "mypy>=1.6.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "dahaverify=dahaverify.cli.main:main",
        ],
    },
)
