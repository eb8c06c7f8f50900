#!/usr/bin/env python3

# Copyright (c) fixpoint authors. All rights reserved.

import re

import setuptools


def fetch_requirements():
    with open("requirements.txt") as f:
        reqs = [line.strip() for line in f.read().split("\n")]
    return [r for r in reqs if r and not r.startswith("#")]


# https://packaging.python.org/guides/single-sourcing-package-version/
def find_version(version_file_path):
    with open(version_file_path) as version_file:
        version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", version_file.read(), re.M)
        if version_match:
            return version_match.group(1)
        raise RuntimeError("Unable to find version string.")


if __name__ == "__main__":
    setuptools.setup(
        name="fixpoint",
        description="fixpoint: runnable constructions of the recursion theorems.",
        version=find_version("fixpoint/__init__.py"),
        install_requires=fetch_requirements(),
        include_package_data=True,
        packages=setuptools.find_packages(exclude=("tests", "tests.*")),
        entry_points={"console_scripts": ["fixpoint=fixpoint.cli:main"]},
        python_requires=">=3.7",
        author="fixpoint authors",
        long_description="fixpoint builds quines, Kleene and Rogers fixed points and Rice witnesses for a small "
        "string-register language and a sandboxed shell subset, runs them under a step budget and checks the "
        "theorem equations on sampled inputs.",
        long_description_content_type="text/markdown",
        classifiers=[
            "Programming Language :: Python :: 3.7",
            "Programming Language :: Python :: 3.8",
            "License :: OSI Approved :: BSD License",
            "Topic :: Scientific/Engineering :: Mathematics",
            "Operating System :: OS Independent",
        ],
    )
