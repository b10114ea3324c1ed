"""
Total Graph Toolkit
~~~~~~~~~~~~~~~~~~~
Finite commutative rings, their total graphs and certified chromatic / clique numbers.
"""
import logging

# See PEP396.
__version__ = "1.0.0"

logging.basicConfig(level=logging.INFO)
