# homhopf's setup.py

from setuptools import setup

from homhopf import __version__ as version

with open('README.txt', 'r') as readme:
    long_description = readme.read()

setup(
    name = "homhopf",
    packages = ["homhopf", "homhopf.examples", "homhopf.test"],
    version = "{version}".format(version=version),
    description = "Exact checks and constructions for finite-dimensional "
                  "Hom-bialgebras, entwinings and their codoubles.",
    author = "The homhopf developers",
    keywords = ["Python", "Hom-Hopf algebra", "entwining", "Yetter-Drinfeld"],
    license="MIT License",
    classifiers = [
        "Development Status :: 4 - Beta",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        ],
    entry_points = {
        'console_scripts': ['homhopf = homhopf.cli:main'],
        },
    test_suite = "homhopf.test",
    long_description = long_description
)
