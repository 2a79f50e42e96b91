"""Finite-group engine and claim ledger for p-Jordan index bounds.

The package constructs small finite groups (permutation groups, matrix
groups over tiny finite fields, semidirect products), enumerates their
subgroup and normal-subgroup lattices, computes automorphism groups, and
verifies a registry of exact numerical claims about minimal indices of
normal abelian subgroups of order coprime to a prime p.
"""

__version__ = "0.1.0"
