from setuptools import setup,find_packages

package_name ='SemiflowNet'

with open("README.md", "r") as fh:
    LONG_DESCRIPTION = fh.read()

classifiers=[
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Programming Language :: Python :: 3.12',
    'Programming Language :: Python :: 3 :: Only',
    'Intended Audience :: Science/Research',
    'Intended Audience :: Education',
    'Topic :: Scientific/Engineering :: Mathematics']

setup(name=package_name,\
      version='0.1.0',\
      description='Semiflows, invariants and behavioural properties of '
                  'place/transition Petri nets in exact arithmetic',
      long_description=LONG_DESCRIPTION,
      long_description_content_type='text/markdown',
      license='MIT',
      classifiers=classifiers,
      keywords='petri-net semiflow invariant hilbert-basis reachability',
      python_requires='>=3.9, <4',
      install_requires=['numpy', 'scipy',
                        'sympy', 'networkx',
                        'matplotlib'],
      extras_require={'test': ['pytest'],
                      'docs': ['sphinx', 'sphinx_bootstrap_theme']},
      packages=find_packages(exclude=['tests', 'tests.*']),
      package_data={'SemiflowNet.netio': ['nets/*.net']},
      entry_points={'console_scripts':
                    ['semiflownet=SemiflowNet.cli:main']},
      zip_safe=False)
