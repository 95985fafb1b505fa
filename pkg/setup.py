import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="qcover",
    version="0.1.0",
    author="qcover developers",
    description="Exact search and counting for intersecting families of "
    "subspaces over finite fields",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    install_requires=[
        "numpy",
        "pandas",
        "networkx"
    ],
    extras_require={
        "test": ["pytest", "pytest-mock"]
    },
    entry_points={
        "console_scripts": ["qcover=qcover.cli.main:main"]
    },
    python_requires='>=3.8',
)
