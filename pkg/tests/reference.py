"""Reference invariant values the implementation must reproduce.

Polynomials are given as printed; compare with ``parse_polynomial`` so term
order and spacing do not matter.
"""

FLAGSHIP_4_1 = "4xy^4+6xy^3"

CLASSICAL_A = {
    "L2a1": "4x^2y^2 + 8xy^2 + 4xy",
    "L4a1": "12x^2y^2 + 4xy",
    "L5a1": "12x^2y^2 + 4xy",
    "L6a1": "12x^2y^2 + 4x^2y",
    "L6a2": "4x^2y^2 + 8xy^2 + 4xy",
    "L6a3": "4x^2y^2 + 4x^2y + 8xy^2",
    "L6a4": "56x^3y^2 + 8y",
    "L6a5": "8x^3y^2 + 24x^2y^2 + 8x^2y + 24xy^2",
    "L6n1": "8x^3y^2 + 24x^2y^2 + 24xy^2 + 8xy",
    "L7a1": "12x^2y^2 + 4x^2y",
    "L7a2": "4x^3y^2 + 8x^2y^2 + 4xy",
    "L7a3": "4x^3y^2 + 8x^2y^2 + 4xy",
    "L7a4": "12x^2y^2 + 4xy",
    "L7a5": "4x^2y^2 + 4x^2y + 8xy^2",
    "L7a6": "4x^2y^2 + 8xy^2 + 4xy",
    "L7a7": "8x^3y^2 + 24x^2y^2 + 24xy^2 + 8xy",
    "L7n1": "4x^3y^2 + 8x^2y^2 + 4xy",
    "L7n2": "4x^3y^2 + 8x^2y^2 + 4xy",
}

CLASSICAL_B = {
    "L2a1": "192xy^6",
    "L4a1": "192xy^6 + 8xy^2",
    "L5a1": "192xy^6 + 8xy^2",
    "L6a1": "192x^2y^6 + 8x^2y^2",
    "L6a2": "192xy^6",
    "L6a3": "192x^2y^6",
    "L6a4": "384xy^6 + 16xy^2 + 32y^2",
    "L6a5": "384x^2y^6",
    "L6n1": "384xy^6",
    "L7a1": "192x^2y^6 + 8x^2y^2",
    "L7a2": "192xy^6 + 8xy^2",
    "L7a3": "192xy^6 + 8xy^2",
    "L7a4": "192xy^6 + 8xy^2",
    "L7a5": "192x^2y^6",
    "L7a6": "192xy^6",
    "L7a7": "384xy^6",
    "L7n1": "192xy^6 + 8xy^2",
    "L7n2": "192xy^6 + 8xy^2",
}

# the printed classes; the last one as printed contains the typo "y^y"
VIRTUAL_CLASSES = {
    "2y+6y^3": """2.1 3.1 3.2 3.3 3.4 4.1 4.2 4.3 4.4 4.6 4.9 4.10 4.11 4.12 4.13 4.14 4.15 4.18
        4.20 4.22 4.25 4.26 4.27 4.28 4.29 4.30 4.31 4.32 4.33 4.34 4.37 4.38 4.39 4.40 4.43
        4.44 4.45 4.46 4.48 4.49 4.50 4.51 4.52 4.53 4.69 4.70 4.73 4.74 4.75 4.78 4.81 4.82
        4.83 4.84 4.87 4.88 4.92 4.93 4.94 4.95 4.101 4.103 4.104""".split(),
    "8y+6y^3": "4.61 4.62 4.64".split(),
    "2xy+6xy^3": """3.5 4.5 4.7 4.8 4.16 4.17 4.19 4.21 4.23 4.24 4.35 4.36 4.41 4.42 4.47 4.55
        4.56 4.57 4.58 4.59 4.60 4.63 4.71 4.72 4.76 4.77 4.79 4.80 4.85 4.86 4.89 4.90 4.91
        4.96 4.97 4.100 4.102 4.105 4.106 4.107 4.108""".split(),
    "8xy+6xy^3": "3.6 3.7 4.65 4.66 4.67 4.68 4.98".split(),
    "6x^2y^y+8x^2y": ["4.99"],
}
VIRTUAL_TYPO = "6x^2y^y+8x^2y"
VIRTUAL_TYPO_READING = "6x^2y^3+8x^2y"

SURFACE = {
    "2_1": "4xy^2",
    "6^{0,1}_1": "2x^2y^2 + 6xy^2",
    "8_1": "4x^2y^2",
    "8^{1,1}_1": "6xy^2",
    "9_1": "4x^2y^2",
    "9^{0,1}_1": "4x^2y^2 + 6xy^2",
    "10_1": "4xy^2",
    "10_2": "4x^2y^2",
    "10_3": "4xy^2",
    "10^1_1": "4x^2y^2",
    "10^{0,1}_1": "4x^2y^2+6xy^2",
    "10^{0,1}_2": "8x^2y^2+2xy^2",
    "10^{1,1}_1": "6xy^2",
    "10^{0,0,1}_1": "6x^3y^2+14x^2y^2",
}

# the bead-coloring matrix over Z_3 of the three-coloring example of 4_1
HS_MATRIX = [
    [2, 0, 2, 2, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 2],
    [0, 0, 2, 0, 2, 2, 0, 0],
    [0, 2, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 2, 2, 2, 0],
    [0, 0, 0, 2, 0, 1, 0, 0],
    [0, 2, 0, 0, 0, 0, 2, 2],
    [2, 0, 0, 0, 0, 0, 1, 0],
]
HS_REDUCED = [[1 if j == i else 0 for j in range(7)] + [2] for i in range(7)] + [[0] * 8]

# printed endomorphism sets
ENDOS_FLAGSHIP = {(3, 3, 3), (1, 2, 3), (2, 1, 3)}
ENDOS_VIRTUAL = {(1, 2, 3), (2, 1, 3), (3, 3, 3)}
ENDOS_SURFACE = {(1, 2, 3), (2, 2, 2), (3, 2, 1)}
