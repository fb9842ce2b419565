# -*- coding: utf-8 -*-
"""
安装配置文件 / Setup Configuration File

square-model - 方形模型随机群工具
Random groups in the square and positive square models
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="square-model-random-groups",
    version="1.0.0",
    description="方形模型随机群: 采样、平凡性与自由性证书、图概率界",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=[
        # 核心依赖 / Core dependencies
        "numpy>=1.22",
        "networkx>=2.8",
        "sympy>=1.10",
    ],
    extras_require={
        "dev": ["pytest>=6.0", "pytest-cov", "black", "flake8", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": [
            "square-model=src.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "data": ["diagrams/*.diag"],
    },
)
