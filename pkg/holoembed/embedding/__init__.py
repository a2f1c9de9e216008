"""
Embedding Package

Weight sequences with certified tails and the operator into power series.
"""
