import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt", "r") as fh:
    requires = fh.read()

setuptools.setup(
    description="Exact antipodes of linearized Hopf monoids",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=requires,
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "hopfmon = hopfmon.__main__:main",
            "hopfmon-validate = hopfmon.validate.__main__:main",
        ]
    },
)
