from setuptools import setup, find_packages

setup(
    name="vlink",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"vlink.corpus": ["fixtures/*.gauss"]},
    install_requires=[
        "pydantic>=2.5.0",
        "python-dotenv>=1.0.0",
        "sympy>=1.12",
    ],
    extras_require={
        "test": ["pytest>=7.4.0"],
    },
    entry_points={
        "console_scripts": ["vlink=vlink.cli:main"],
    },
    author="Your Name",
    author_email="your.email@example.com",
    description="Writhe-type polynomial invariants of virtual links from Gauss codes",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    url="https://github.com/yourusername/vlink",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
