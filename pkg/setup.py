#!/usr/bin/env python3
"""
pnheights setup

Installs the package and the `pn` console script.
"""

from pathlib import Path

from setuptools import find_packages, setup

base_path = Path(__file__).parent


def read_requirements():
    """Runtime requirements, without comments or the test runner."""
    lines = (base_path / "requirements.txt").read_text().splitlines()
    return [
        line.strip() for line in lines
        if line.strip() and not line.startswith("#") and not line.startswith("pytest")
    ]


setup(
    name="pnheights",
    version="0.1.0",
    description="Exact coefficients, heights and extremal constructions for inclusion-exclusion polynomials",
    long_description=(base_path / "README.md").read_text(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    install_requires=read_requirements(),
    extras_require={"dev": ["pytest>=7.4.0"]},
    entry_points={"console_scripts": ["pn=pnheights.cli:main"]},
)
