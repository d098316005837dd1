"""prlab: a partition-regularity laboratory.

Exact tooling for the combinatorics of numbers: regularity criteria for linear
and nonlinear integer polynomials, exhaustive coloring searches with witness
extraction, a symbolic calculus of iterated-star terms, and finite embeddability
of sets of naturals.
"""

__version__ = "0.1.0"
