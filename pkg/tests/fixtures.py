"""Published tables transcribed for use as test oracles.

Everything here is typed in from the printed tables, independent of the
construction code it is used to check.
"""

import cmath
import math

import numpy as np

from mublines.framecore import CVector, LineSet
from mublines.scalars import Scalar

# the 4 MUBs in C^4 from the (4,4,4,1)-RDS {1, x, y, x^3 y^3}
MUB4_TABLE = [
    [  # B1
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ],
    [  # B2
        [1, 1, 1j, -1j],
        [1, 1, -1j, 1j],
        [1, -1, 1j, 1j],
        [1, -1, -1j, -1j],
    ],
    [  # B3
        [1, 1j, 1, -1j],
        [1, 1j, -1, 1j],
        [1, -1j, 1, 1j],
        [1, -1j, -1, -1j],
    ],
    [  # B4
        [1, 1j, 1j, -1],
        [1, 1j, -1j, 1],
        [1, -1j, 1j, 1],
        [1, -1j, -1j, -1],
    ],
]

OMEGA3 = cmath.exp(2j * cmath.pi / 3)

# the 3 MUBs in C^3 from the (3,3,3,1)-RDS {1, y, x y^2}; entries are
# omega-powers, written as exponents
MUB3_TABLE_EXPONENTS = [
    [[0, 0, 0], [0, 1, 2], [0, 2, 1]],  # B1
    [[0, 0, 1], [0, 1, 0], [0, 2, 2]],  # B2
    [[0, 0, 2], [0, 1, 1], [0, 2, 0]],  # B3
]


def omega3_pow(e: int) -> complex:
    # written so the float value is bit-identical to other e^(2*pi*i*e/3)
    # evaluations; ** powering drifts in the last ulp
    return cmath.exp(2j * cmath.pi * e / 3)


def mub3_table() -> list[list[list[complex]]]:
    return [
        [[omega3_pow(e) for e in row] for row in basis]
        for basis in MUB3_TABLE_EXPONENTS
    ]


def sqrt_2_plus_sqrt5() -> float:
    return math.sqrt(2 + math.sqrt(5))


def sixteen_lines_d4() -> LineSet:
    """The published set of 16 equiangular vectors in C^4 with entries
    1, +-1, +-i and +-sqrt(2+sqrt(5)) (possibly times i)."""
    t = sqrt_2_plus_sqrt5()
    rows = [
        [t, 1, 1, 1],
        [t, 1, -1, -1],
        [t, -1, 1, -1],
        [t, -1, -1, 1],
        [1, 1, 1j * t, -1j],
        [1, 1, -1j * t, 1j],
        [1, -1, 1j * t, 1j],
        [1, -1, -1j * t, -1j],
        [1, 1j, 1, -1j * t],
        [1, 1j, -1, 1j * t],
        [1, -1j, 1, 1j * t],
        [1, -1j, -1, -1j * t],
        [1, 1j * t, 1j, -1],
        [1, 1j * t, -1j, 1],
        [1, -1j * t, 1j, 1],
        [1, -1j * t, -1j, -1],
    ]
    return LineSet(4, tuple(CVector.make(r) for r in rows))


def lblock4_table(v: complex) -> list[list[complex]]:
    """L-block of the 4 MUBs at pi = [1,3,4,2], symbolic constant v."""
    return [
        [v, 1, 1, 1],
        [v, 1, -1, -1],
        [v, -1, 1, -1],
        [v, -1, -1, 1],
        [1, 1, 1j * v, -1j],
        [1, 1, -1j * v, 1j],
        [1, -1, 1j * v, 1j],
        [1, -1, -1j * v, -1j],
        [1, 1j, 1, -1j * v],
        [1, 1j, -1, 1j * v],
        [1, -1j, 1, 1j * v],
        [1, -1j, -1, -1j * v],
        [1, 1j * v, 1j, -1],
        [1, 1j * v, -1j, 1],
        [1, -1j * v, 1j, 1],
        [1, -1j * v, -1j, -1],
    ]


# --- the Zauner unitary and fiducial orbit in dimension 4 -------------------

_S2 = math.sqrt(2)

ZAUNER4_TABLE = 0.5 * np.array(
    [
        [(1 + 1j) / _S2, -1j, -(1 + 1j) / _S2, -1j],
        [(1 + 1j) / _S2, 1, (1 + 1j) / _S2, -1],
        [(1 + 1j) / _S2, 1j, -(1 + 1j) / _S2, 1j],
        [(1 + 1j) / _S2, -1, (1 + 1j) / _S2, 1],
    ],
    dtype=complex,
)

# the displayed 16-row orbit pattern: entry s of row (k, j) is i^(j*s) times
# x_((s+k) mod 4), e.g. rows 2 and 6 read (x0, i x1, -x2, -i x3) and
# (x1, i x2, -x3, -i x0)
WH4_ORBIT_PATTERN = [
    [((j * s) % 4, (s + k) % 4) for s in range(4)]
    for k in range(4)
    for j in range(4)
]


def wh4_orbit_table(x: np.ndarray) -> LineSet:
    i_powers = [1, 1j, -1, -1j]
    rows = [
        [i_powers[p] * x[idx] for p, idx in row] for row in WH4_ORBIT_PATTERN
    ]
    return LineSet(4, tuple(CVector.make(r) for r in rows))


# --- the 64 equiangular lines in C^8 (exact Gaussian integers) --------------

_TOKENS = {
    "1": (1, 0),
    "-1": (-1, 0),
    "i": (0, 1),
    "-i": (0, -1),
    "2+i": (2, 1),
    "-2-i": (-2, -1),
    "-1+2i": (-1, 2),
    "1-2i": (1, -2),
}

_LINES64_ROWS = """
2+i,1,1,1,-i,1,1,1
2+i,1,-1,-1,-i,1,-1,-1
2+i,-1,1,-1,-i,-1,1,-1
2+i,-1,-1,1,-i,-1,-1,1
1,1,-1+2i,-i,1,1,1,-i
1,1,1-2i,i,1,1,-1,i
1,-1,-1+2i,i,1,-1,1,i
1,-1,1-2i,-i,1,-1,-1,-i
1,i,1,1-2i,1,i,1,-1
1,i,-1,-1+2i,1,i,-1,1
1,-i,1,-1+2i,1,-i,1,1
1,-i,-1,1-2i,1,-i,-1,-1
1,-1+2i,i,-1,1,1,i,-1
1,-1+2i,-i,1,1,1,-i,1
1,1-2i,i,1,1,-1,i,1
1,1-2i,-i,-1,1,-1,-i,-1
-1+2i,1,1,1,-1,-1,-1,-1
-1+2i,1,-1,-1,-1,-1,1,1
-1+2i,-1,1,-1,-1,1,-1,1
-1+2i,-1,-1,1,-1,1,1,-1
1,1,-2-i,-i,-1,-1,-i,i
1,1,2+i,i,-1,-1,i,-i
1,-1,-2-i,i,-1,1,-i,-i
1,-1,2+i,-i,-1,1,i,i
1,i,1,2+i,-1,-i,-1,i
1,i,-1,-2-i,-1,-i,1,-i
1,-i,1,-2-i,-1,i,-1,-i
1,-i,-1,2+i,-1,i,1,i
1,-2-i,i,-1,-1,-i,-i,1
1,-2-i,-i,1,-1,-i,i,-1
1,2+i,i,1,-1,i,-i,-1
1,2+i,-i,-1,-1,i,i,1
-i,1,1,1,2+i,1,1,1
-i,1,-1,-1,2+i,1,-1,-1
-i,-1,1,-1,2+i,-1,1,-1
-i,-1,-1,1,2+i,-1,-1,1
1,1,1,-i,1,1,-1+2i,-i
1,1,-1,i,1,1,1-2i,i
1,-1,1,i,1,-1,-1+2i,i
1,-1,-1,-i,1,-1,1-2i,-i
1,i,1,-1,1,i,1,1-2i
1,i,-1,1,1,i,-1,-1+2i
1,-i,1,1,1,-i,1,-1+2i
1,-i,-1,-1,1,-i,-1,1-2i
1,1,i,-1,1,-1+2i,i,-1
1,1,-i,1,1,-1+2i,-i,1
1,-1,i,1,1,1-2i,i,1
1,-1,-i,-1,1,1-2i,-i,-1
1,1,1,1,1-2i,-1,-1,-1
1,1,-1,-1,1-2i,-1,1,1
1,-1,1,-1,1-2i,1,-1,1
1,-1,-1,1,1-2i,1,1,-1
1,1,i,-i,-1,-1,2+i,i
1,1,-i,i,-1,-1,-2-i,-i
1,-1,i,i,-1,1,2+i,-i
1,-1,-i,-i,-1,1,-2-i,i
1,i,1,-i,-1,-i,-1,-2-i
1,i,-1,i,-1,-i,1,2+i
1,-i,1,i,-1,i,-1,2+i
1,-i,-1,-i,-1,i,1,-2-i
1,i,i,-1,-1,2+i,-i,1
1,i,-i,1,-1,2+i,i,-1
1,-i,i,1,-1,-2-i,-i,-1
1,-i,-i,-1,-1,-2-i,i,1
""".strip().splitlines()


def lines64_d8() -> LineSet:
    """The 64 almost flat vectors in C^8 with Gaussian-integer entries."""
    vectors = []
    for line in _LINES64_ROWS:
        pairs = [_TOKENS[token] for token in line.split(",")]
        vectors.append(CVector(tuple(Scalar.gauss(a, b) for a, b in pairs)))
    return LineSet(8, tuple(vectors))
