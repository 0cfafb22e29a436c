from setuptools import setup

def get_version(rel_path):
    for line in open(rel_path).readlines():
        if line.startswith('__version__'):
            delim = '"' if '"' in line else "'"
            return line.split(delim)[1]
    else:
        raise RuntimeError("Unable to find version string.")

VERSION=get_version("cvfaithful/__init__.py")

REQUIREMENTS = [
    'numpy>=1.23',
    'scipy>=1.9',
    'pandas>=1.5',
    'termcolor>=1.1.0',
    'uritools>=2.1.0',
]

setup(
    name='cvfaithful',
    version=VERSION,
    packages=['cvfaithful'],
    license='MIT',
    author='',
    author_email='',
    description='Tomographic faithfulness of two-mode continuous-variable quantum states',
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    keywords=["quantum", "tomography", "wigner", "continuous-variable", "faithful"],
    python_requires='>=3.10',
    install_requires=REQUIREMENTS,
    entry_points={
        'console_scripts': [
            'cvfaithful=cvfaithful.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: POSIX',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Physics',
    ],
)
