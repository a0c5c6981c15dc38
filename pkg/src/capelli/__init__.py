"""Exact-arithmetic Capelli eigenvalue polynomials in two variables.

Interpolation polynomials over Q(kappa), their pole structure at integer
parameters, the eigenvalue polynomials of the Capelli basis by several
independent routes, terminating hypergeometric identities, and the
block-model degeneration at arbitrary rational categorical dimension.
Everything is computed over Q; equality always means exact equality.
"""

__version__ = "0.1.0"
