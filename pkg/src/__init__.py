"""
Circle Trace Engine Package
"""

__version__ = "1.0.0"
__description__ = "Exact traces over the circle, paracyclic combinatorics and Hochschild homology"
