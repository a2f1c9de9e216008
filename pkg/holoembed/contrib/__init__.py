"""
Contrib Package - Shared Modules

Exact scalars, the seeded generator, wire schemas, the error hierarchy and the
command registry used by every other package.
"""
