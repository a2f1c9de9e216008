"""
holoembed

Exact biorthogonal systems in Köthe echelon spaces and their embedding into
spaces of holomorphic functions, with every step certified in rational
arithmetic.
"""

__version__ = '0.1.0'
