"""
Biorthogonal Package

Dense families, exact two-sided biorthogonalization, normalization against the
continuous norm and the finite-stage certificate of the system conditions.
"""
