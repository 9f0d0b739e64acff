from setuptools import setup, find_packages

setup(
    name='lskit',
    version='0.1.0',
    description='Min-max critical values, generating families and front spectra on grids',
    packages=find_packages(exclude=['tests']),
    install_requires=[
        'gevent',
        'setproctitle',
        'numpy',
        'scipy',
        'matplotlib',
        'tomli; python_version < "3.11"',
        ],
    entry_points={
        'console_scripts': ['lskit=lskit.cli:main'],
        },
    zip_safe=False
)
