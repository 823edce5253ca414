"""Reference values transcribed from the literature, kept verbatim.

Values are stored exactly as printed, including cells that disagree with
the graphs they describe; the disagreements are listed in DISCREPANCIES and
checked by the verification suites rather than silently corrected.
"""

from __future__ import annotations

# Edge counts e_n as polynomials in a and b: {(i, j): coef} for coef * a^i * b^j.
EDGE_POLYNOMIALS: dict[int, dict[tuple[int, int], int]] = {
    1: {(1, 0): 1, (0, 0): -1},
    2: {(2, 0): 2, (1, 0): -2, (0, 1): 1},
    3: {(3, 0): 3, (2, 0): -3, (1, 1): 4, (0, 1): -2},
    4: {(4, 0): 4, (3, 0): -4, (2, 1): 9, (1, 1): -6, (0, 2): 2},
    5: {(5, 0): 5, (4, 0): -5, (3, 1): 16, (2, 1): -12, (1, 2): 9, (0, 2): -3},
    6: {(6, 0): 6, (5, 0): -6, (4, 1): 25, (3, 1): -20, (2, 2): 24, (1, 2): -12, (0, 3): 3},
}

# Degree distributions Delta_{n,k}: row n lists k = 1, 2, ... as printed.
DEGREE_ROWS: dict[tuple[int, int], dict[int, list[int]]] = {
    (1, 2): {
        1: [1, 0, 0, 0, 0],
        2: [2, 1, 0, 0, 0],
        3: [2, 3, 0, 0, 0],
        4: [1, 4, 5, 1, 0],
        5: [0, 5, 10, 6, 0],
    },
    (2, 2): {
        1: [2, 0, 0, 0, 0, 0, 0, 0],
        2: [1, 4, 1, 0, 0, 0, 0, 0],
        3: [0, 4, 8, 4, 0, 0, 0, 0],
        4: [0, 1, 12, 18, 12, 1, 0, 0],
        5: [0, 0, 6, 32, 44, 32, 6, 0],
    },
    (3, 2): {
        1: [2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        2: [1, 4, 5, 1, 0, 0, 0, 0, 0, 0],
        3: [0, 4, 10, 16, 8, 1, 0, 0, 0, 0],
        4: [0, 1, 12, 30, 47, 37, 11, 1, 0, 0],
        5: [0, 0, 6, 35, 92, 142, 138, 67, 14, 1],
    },
}

# Cube polynomials, coefficient lists indexed by the power of x.
CUBE_POLYNOMIALS: dict[tuple[int, int], dict[int, list[int]]] = {
    (1, 2): {
        0: [1],
        1: [1],
        2: [3, 2],
        3: [5, 4],
        4: [11, 14, 4],
        5: [21, 32, 12],
    },
    (3, 2): {
        0: [1],
        1: [3, 2],
        2: [11, 14, 4],
        3: [39, 74, 44, 8],
        4: [139, 350, 316, 120, 16],
        5: [495, 1554, 1884, 1096, 304, 32],
    },
}

# Printed hypercube images for a=3, b=2, as strings.
SIGMA_IMAGES_3_2: dict[str, str] = {
    "0": "0110",
    "1": "0010",
    "2": "0000",
    "03": "11100000",
    "04": "1110001",
}

SIGMA_IMAGES_1_2: dict[str, str] = {"0": "00", "01": "1000", "02": "1001"}

# Median example at (3,2,3).
MEDIAN_EXAMPLE = {"triple": ("042", "204", "110"), "median": "112"}

# Instances with a depicted Hamiltonian cycle: (a, b, n) as named, and the
# word length actually shown for the second one.
DEPICTED_CYCLES = {"two_two": (2, 2, 4), "one_three_named": (1, 3, 6), "one_three_word_length": 5}

# A smaller embedding of the Jacobsthal cube into Q_n that is not induced.
COMPACT_JACOBSTHAL_SIGMA: dict[str, str] = {"0": "0", "01": "10", "02": "11"}
COMPACT_JACOBSTHAL_BAD_PAIRS = (("0001", "0020"), ("0200", "0010"))

DISCREPANCIES: dict[str, dict[str, str]] = {
    "degree-row-a1-b2-n1": {
        "reference": "row n=1 of the (1,2) degree table puts its single vertex under k=1",
        "observed": "Pi^{1,2}_1 is one vertex of degree 0: Delta_{1,0}=1, Delta_{1,1}=0",
    },
    "degree-initial-value-a1": {
        "reference": "a=1 degree recurrence initial value Delta_{2,2}=b-2",
        "observed": "Pi^{1,b}_2 is the path P_{b+1}, so Delta_{2,2}=b-1; base rows come from the built graphs",
    },
    "cube-coefficient-initial-values": {
        "reference": "initial values c_0(Pi_n)=s_n and c_1(Pi_n)=a-1",
        "observed": "c_1(Pi_n)=e_n in general; read as the n<=1 base rows [1] and [a, a-1]",
    },
    "sigma-04-length": {
        "reference": "sigma(04)=1110001 for a=3, b=2 (7 characters)",
        "observed": "sigma(04)=11100001; Pair images have length 2(a+b-1)=8",
    },
    "depicted-cycle-instance": {
        "reference": "drawn Hamiltonian cycle labelled as Pi^{1,3}_6",
        "observed": "its labels have length 5 and s^{1,3}_6=97 is odd; treated as Pi^{1,3}_5 (40 vertices)",
    },
    "odd-order-cycles": {
        "reference": "non-Hamiltonicity for odd vertex count stated as open",
        "observed": "the cubes are bipartite, so odd order rules out a Hamiltonian cycle; reported as impossible",
    },
}
