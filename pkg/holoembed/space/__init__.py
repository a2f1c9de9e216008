"""
Space Package

Concrete separable Fréchet spaces with a continuous norm, realized as Köthe
echelon spaces of order 1 on a finite window.
"""
