"""The three MUB-based equiangular-line constructions.

1. Single-entry scaling of the union of d RDS-derived MUBs (with exhaustive
   permutation/phase search).
2. The one-parameter family of 64 lines in C^8 built from the dimension-4
   MUBs, containing the Hoggar set at a=0.
3. Concatenated L-block pairs in C^(2d), including the dimension-4 extension
   to 64 lines certified in exact Gaussian-integer arithmetic.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .abelian import RelativeDifferenceSet, characters, rds_verify
from .framecore import (
    DEFAULT_TOL,
    CVector,
    GramReport,
    LineSet,
    gram_analyze,
    inner,
    verify_mubs,
)
from .scalars import Scalar


class InvalidRds(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MubFamily:
    dim: int
    bases: tuple[LineSet, ...]
    source_rds: RelativeDifferenceSet


@dataclass(frozen=True)
class ScalingSpec:
    """Permutation pi (1-based images) and scaling constant v."""

    perm: tuple[int, ...]
    v: Scalar


@dataclass(frozen=True)
class BlockPairSpec:
    perm: tuple[int, ...]
    a: float
    b: float
    variant: str = "default"  # "default" or "i-twist"


def mubs_from_rds(rds: RelativeDifferenceSet) -> MubFamily:
    """Godsil-Roy: rows (chi(r_1), ..., chi(r_d)) over all characters, grouped
    into d bases by the character's restriction to the forbidden subgroup."""
    try:
        m, n, k, lam = rds_verify(rds)
    except ValueError as exc:
        raise InvalidRds(str(exc)) from exc
    if not (m == n == k and lam == 1):
        raise InvalidRds(f"need a (d,d,d,1)-RDS, got {(m, n, k, lam)}")
    d = m

    subgroup = sorted(rds.forbidden_subgroup())
    sub_elements = [rds.group.element(e) for e in subgroup]

    groups: dict[tuple, list] = {}
    for chi in characters(rds.group):
        signature = tuple(chi.phase_fraction(g) for g in sub_elements)
        groups.setdefault(signature, []).append(chi)

    if any(len(chars) != d for chars in groups.values()) or len(groups) != d:
        raise InvalidRds("character grouping by restriction to N is not d-by-d")

    # characters within a group are already lexicographic; order the groups
    # by their lexicographically smallest member
    ordered = sorted(groups.values(), key=lambda chars: chars[0].exponents)
    bases = []
    for j, chars in enumerate(ordered, start=1):
        vectors = tuple(
            CVector(tuple(chi(r) for r in rds.elements)) for chi in chars
        )
        bases.append(
            LineSet(d, vectors, {"construction": "rds-mub", "basis": j,
                                 "rds": rds.label or "custom"})
        )
    family = MubFamily(d, tuple(bases), rds)
    if not verify_mubs(list(family.bases)):
        raise InvalidRds("constructed bases failed the MUB check")
    return family


def l_block(family: MubFamily, spec: ScalingSpec) -> LineSet:
    """L-block: in basis j, multiply entry pi(j) of each vector by v."""
    d = family.dim
    if sorted(spec.perm) != list(range(1, d + 1)):
        raise ValueError(f"perm must be a permutation of 1..{d}")
    v = Scalar.coerce(spec.v)
    vectors = []
    for j, basis in enumerate(family.bases, start=1):
        col = spec.perm[j - 1] - 1
        for vec in basis.vectors:
            entries = list(vec.entries)
            entries[col] = entries[col] * v
            vectors.append(CVector(tuple(entries)))
    return LineSet(
        d,
        tuple(vectors),
        {
            "construction": "c1-lblock",
            "rds": family.source_rds.label or "custom",
            "perm": list(spec.perm),
            "v": [v.re, v.im],
        },
    )


def c1_magnitudes(d: int) -> list[float]:
    """Admissible |v| values sqrt(2 +- sqrt(d+1)); the minus branch exists
    only while 2 - sqrt(d+1) >= 0 (d <= 3)."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    root = math.sqrt(d + 1)
    mags = [math.sqrt(2 + root)]
    if 2 - root >= 0:
        mags.append(math.sqrt(2 - root))
    return mags


def c1_search(
    family: MubFamily,
    phase_roots: int = 4,
    budget: int = 200_000,
    tol: float = DEFAULT_TOL,
) -> list[tuple[ScalingSpec, GramReport]]:
    """Exhaustive Construction-1 search over all permutations and all
    v = zeta * |v| on the phase grid; returns the equiangular hits in
    lexicographic (perm, magnitude-desc, phase) order."""
    d = family.dim
    mags = c1_magnitudes(d)
    space = math.factorial(d) * phase_roots * len(mags)
    if space > budget:
        raise BudgetExceeded(
            f"search space {space} exceeds budget {budget}; raise the budget "
            "to proceed"
        )
    hits = []
    for perm in itertools.permutations(range(1, d + 1)):
        for mag in mags:
            for p in range(phase_roots):
                if mag == 0.0 and p > 0:
                    break
                zeta = cmath.exp(2j * cmath.pi * p / phase_roots)
                spec = ScalingSpec(perm, Scalar.from_complex(zeta * mag))
                report = gram_analyze(l_block(family, spec), tol)
                if report.equiangular:
                    hits.append((spec, report))
    return hits


def theorem46_predicate(family: MubFamily, perm: tuple[int, ...]) -> bool:
    """d=4 criterion: every cross-basis inner product of L(pi, 0) has
    magnitude sqrt(2); computed exactly (squared magnitude 2) on the Gaussian
    table.  Same-basis pairs are skipped: their magnitude is 1 for every
    permutation and carries no information about pi."""
    if family.dim != 4:
        raise ValueError("the criterion applies only in dimension 4")
    d = family.dim
    lines = l_block(family, ScalingSpec(tuple(perm), Scalar.gauss(0, 0)))
    vecs = lines.vectors
    for j in range(len(vecs)):
        for k in range(j + 1, len(vecs)):
            if j // d == k // d:
                continue
            if inner(vecs[j], vecs[k]).abs2() != 2:
                return False
    return True


# --- Construction 2 (dimension 8) -------------------------------------------


def _mub4_float() -> list[np.ndarray]:
    from .abelian import builtin_rds

    family = mubs_from_rds(builtin_rds(4))
    return [basis.to_matrix() for basis in family.bases]


def construction2_family(a: float) -> LineSet:
    """64 lines in C^8 from the dimension-4 MUBs and the one-parameter
    column blocks C_j(a), D_j(a); equals the (twisted) Hoggar set at a=0."""
    bases = _mub4_float()
    c = (a - 1 + 1j * (a + 1)) / math.sqrt(1 + a * a)
    dval = (a + 1 + 1j * (a - 1)) / math.sqrt(1 + a * a)
    vectors = []
    for j, basis in enumerate(bases):
        col = np.zeros((4, 4), dtype=complex)
        col[:, j] = 1.0
        blocks = [
            np.hstack([basis, c * col]),
            np.hstack([basis, -c * col]),
            np.hstack([dval * col, basis]),
            np.hstack([-dval * col, basis]),
        ]
        for block in blocks:
            vectors.extend(CVector.make(row) for row in block)
    return LineSet(8, tuple(vectors), {"construction": "c2", "a": a})


_PAULI_REPS = (
    np.eye(2, dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex) @ np.array([[0, 1], [1, 0]],
                                                          dtype=complex),
)

_HOGGAR_SEED = np.array(
    [
        0,
        0,
        (1 + 1j) / math.sqrt(2),
        (1 - 1j) / math.sqrt(2),
        (1 + 1j) / math.sqrt(2),
        -(1 + 1j) / math.sqrt(2),
        0,
        math.sqrt(2),
    ],
    dtype=complex,
)


def hoggar_tensor_orbit() -> LineSet:
    """Hoggar's 64 lines as the orbit of the given seed under the 3-fold
    tensor power of the dimension-2 Weyl-Heisenberg coset representatives."""
    vectors = []
    for a, b, c in itertools.product(_PAULI_REPS, repeat=3):
        mat = np.kron(a, np.kron(b, c))
        vectors.append(CVector.make(mat @ _HOGGAR_SEED))
    return LineSet(8, tuple(vectors), {"construction": "hoggar-orbit"})


# --- Construction 3 (block pairs in C^(2d)) ---------------------------------


def _concat_blocks(left: LineSet, right: LineSet, negate_right: bool,
                   provenance: dict) -> LineSet:
    vectors = []
    for lv, rv in zip(left.vectors, right.vectors):
        rv2 = rv.scale(Scalar.gauss(-1, 0)) if negate_right else rv
        vectors.append(lv.concat(rv2))
    return LineSet(left.dim * 2, tuple(vectors), provenance)


def construction3_pair(family: MubFamily, spec: BlockPairSpec) -> LineSet:
    """[L(pi, v)  L(pi, v')] with v = a+ib and v' = 2-a-ib, in C^(2d).

    The "i-twist" variant builds [L(pi, i*v)  -L(pi, i*v')], the only other
    block pattern appearing in the dimension-4 extension.
    """
    v = complex(spec.a, spec.b)
    vp = 2 - v
    if spec.variant == "default":
        left, right, negate = v, vp, False
    elif spec.variant == "i-twist":
        left, right, negate = 1j * v, 1j * vp, True
    else:
        raise ValueError(f"unknown variant {spec.variant!r}")

    def scalar(z: complex) -> Scalar:
        if z.real == int(z.real) and z.imag == int(z.imag):
            return Scalar.gauss(int(z.real), int(z.imag))
        return Scalar.from_complex(z)

    lblk = l_block(family, ScalingSpec(spec.perm, scalar(left)))
    rblk = l_block(family, ScalingSpec(spec.perm, scalar(right)))
    return _concat_blocks(
        lblk,
        rblk,
        negate,
        {
            "construction": "c3-pair",
            "rds": family.source_rds.label or "custom",
            "perm": list(spec.perm),
            "a": spec.a,
            "b": spec.b,
            "variant": spec.variant,
        },
    )


def construction3_solve(d: int, samples: int = 0) -> list[tuple[float, float]]:
    """Parameter pairs on the circle b^2 + (a-1)^2 = sqrt(d), where both
    magnitude classes of the block pair coincide at 2*sqrt(d)."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    radius = d ** 0.25
    points = [(1.0, radius), (1.0 - radius, 0.0)]
    for s in range(samples):
        theta = 2 * math.pi * s / samples
        points.append((1.0 + radius * math.cos(theta), radius * math.sin(theta)))
    return points


def construction3_d4_extension() -> LineSet:
    """The exact 64-line set in C^8: four 16-vector block pairs over the
    dimension-4 MUBs with pi = [1,3,4,2] and Gaussian-integer constants.

    Block order follows the published table: [L(2+i) L(-i)], [L(-1+2i) -L(1)],
    [L(-i) L(2+i)], [L(1) -L(-1+2i)].
    """
    from .abelian import builtin_rds

    family = mubs_from_rds(builtin_rds(4))
    perm = (1, 3, 4, 2)

    def lb(a: int, b: int) -> LineSet:
        return l_block(family, ScalingSpec(perm, Scalar.gauss(a, b)))

    provenance = {
        "construction": "c3-d4-extension",
        "rds": "builtin:4",
        "perm": list(perm),
    }
    blocks = [
        _concat_blocks(lb(2, 1), lb(0, -1), False, provenance),
        _concat_blocks(lb(-1, 2), lb(1, 0), True, provenance),
        _concat_blocks(lb(0, -1), lb(2, 1), False, provenance),
        _concat_blocks(lb(1, 0), lb(-1, 2), True, provenance),
    ]
    vectors = tuple(v for block in blocks for v in block.vectors)
    return LineSet(8, vectors, provenance)
