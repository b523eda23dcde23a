"""Exact-arithmetic toolkit for universal invariant bilinear forms, current
algebra 2-cocycles and their extensions, loop-algebra residue cocycles, and
Lie algebra bundles over discrete bases.

Everything is computed over the rationals with no tolerances: subspaces are
kept in canonical reduced row echelon form so equality of spaces is equality
of representations.
"""

__version__ = "0.1.0"
