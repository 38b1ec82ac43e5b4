from setuptools import setup, find_packages
import os

requirements_path = os.path.join(os.path.dirname(__file__), "requirements.txt")
with open(requirements_path, "r") as f:
    requirements = [line for line in f.read().splitlines() if line and not line.startswith("pytest")]

setup(
    name='cover-pairs',
    version='0.1',
    packages=find_packages(exclude=["tests"]),
    python_requires='>=3.10',
    install_requires=requirements + ['tomli; python_version < "3.11"'],
    extras_require={'test': ['pytest>=7.4']},
    entry_points={
        'console_scripts': [
            'cover-pairs=app.main:main',
        ],
    },
)
