from setuptools import setup

setup(
    name="categorical-quantum-protocols",
    version="0.1.0",
    py_modules=[
        "exceptions",
        "scalar_rings",
        "shape_category",
        "matrix_morphisms",
        "generators",
        "abstract_qm",
        "base_verifier",
        "teleportation_base",
        "protocols",
        "lemma_suite",
        "cli",
    ],
    package_dir={"": "."},
    install_requires=[
        "numpy",
    ],
    entry_points={
        "console_scripts": ["cqp=cli:main"],
    },
)
