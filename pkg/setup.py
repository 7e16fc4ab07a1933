from setuptools import setup, find_packages

setup(
    name="ellipsum",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=[
        "fastapi>=0.104.1",
        "uvicorn[standard]>=0.24.0",
        "python-dotenv>=1.0.0",
        "pydantic>=2.8.0",
        "httpx>=0.27.0",
        "jinja2>=3.1.2",
        "mpmath>=1.3.0",
        "sympy>=1.12",
    ],
    extras_require={
        "test": ["pytest>=7.4.0"],
    },
    entry_points={
        "console_scripts": [
            "ellipsum = src.cli:main",
        ],
    },
    python_requires=">=3.9",
)
