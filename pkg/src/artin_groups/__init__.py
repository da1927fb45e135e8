"""Spherical Artin Groups Engine

Exact Garside-theoretic computations for Artin groups of spherical type:
normal forms, Charney forms, the word problem, the invariants cd, mf,
rkAb, rkZ and a decision procedure for isomorphism.
"""

__version__ = "0.1.0"
__author__ = "Artin Groups Engine"
