#!/usr/bin/env python3
"""
Setup script for qpart, the exact q-series identity verifier.
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text(encoding="utf-8")

# Read requirements
with open(this_directory / "requirements.txt") as f:
    requirements = [
        line.split("#")[0].strip()
        for line in f
        if line.strip() and not line.startswith("#")
    ]

setup(
    name="qpart",
    version="1.0.0",
    author="Independent Developer",
    author_email="developer@example.com",
    description="Exact truncated q-series verification of partition identities",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["main"],
    package_data={"config": ["defaults.json", "profiles/*.json", "profiles/*.yaml"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={
        "dev": [
            "black>=21.0.0",
            "flake8>=3.9.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "qpart=main:main",
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
