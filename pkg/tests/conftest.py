"""Shared golden data for the test suite."""

# First 35 terms of the degree-3 construction (cubic subsequence on one
# residue class mod 9), starting from its 11-term initial condition.
DEGREE3_TERMS_35 = [
    7, 0, 5, 9, 3, 8, 9, 2, 9, 9, 3, 14, 9, 3, 22, 9, 2, 18,
    9, 3, 32, 9, 3, 54, 9, 2, 27, 9, 3, 59, 9, 3, 113, 9, 2,
]

DEGREE3_INIT = DEGREE3_TERMS_35[:11]

# Hofstadter's Q sequence from Q(1) = Q(2) = 1, hand-evaluated.
HOFSTADTER_Q_12 = [1, 1, 2, 3, 3, 4, 5, 5, 6, 6, 6, 8]
