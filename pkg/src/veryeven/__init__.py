"""Exact Borel-Weil-Bott toolkit for very even nilpotent orbits in type D.

Submodules: ``rootsys`` (root data, dot action), ``bmod`` (weight multisets of
B-modules), ``charlib`` (Bott and Euler characteristics), ``prover`` (lemma
replay and character identities), ``orbits`` (partition calculus) and ``cli``.
"""
__version__ = "0.1.0"
