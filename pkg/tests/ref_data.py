"""Regression fixtures shared by several test modules.

The two 4x4 adjacency matrices are the reduced generating graphs of the
five-qudit code for the single-site cut {1} and the two-site cut {1, 2};
their ranks over GF(2) are 2 and 4.
"""

from __future__ import annotations

FIVE_QUDIT_CUT_1 = [
    [0, 0, 0, -1],
    [0, 0, 0, 0],
    [0, 0, 0, -1],
    [1, 0, 1, 0],
]

FIVE_QUDIT_CUT_12 = [
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 0, 1, 0],
]
