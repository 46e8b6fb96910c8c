#!/usr/bin/env python
import sys
import pathlib
from setuptools import setup, find_namespace_packages

if sys.version_info < (3, 8):
    print("Error: su23 requires at least Python 3.8")
    print("Error: Please upgrade your Python version to 3.8 or later")
    sys.exit(1)

package_name = "su23-core"
# Managed by tbump - don't change manually
package_version = '0.1.0'
description = "(2,3)-generators of SU_n(q^2): construction, parameter search and verification"

long_description = (pathlib.Path(__file__).parent / "README.md").read_text()

requires = [
    "markupsafe==2.0.1",
    "Jinja2>=2.11.3, <3.0",
    "click>=8.0, <9.0",
    "pyyaml>=5.4.1, <7.0",
    "sympy>=1.9, <2.0",
]
setup(
    name=package_name,
    version=package_version,
    author="su23 contributors",
    description=description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_namespace_packages(include=["su23*"]),
    install_requires=requires,
    entry_points={"console_scripts": ["su23=su23.__main__:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.8",
)
