"""
qeulerian: exact q-series calculus and permutation statistics for
Stirling-Eulerian generating functions.
"""

__version__ = "0.1.0"
