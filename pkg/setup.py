import setuptools

setuptools.setup(
    name="newton_monodromy",
    version="0.1.0",
    description="Monodromy zeta functions, Jordan blocks and spectra of meromorphic germs P/Q from Newton polyhedra.",
    packages=setuptools.find_packages('src'),
    package_dir={'': 'src'},
    python_requires=">=3.9",
    install_requires=["numpy", "pandas", "sympy"],
    extras_require={"tests": ["pytest"]},
    entry_points={"console_scripts": ["newton-monodromy=newton_monodromy.cli.commands:main"]},
)
