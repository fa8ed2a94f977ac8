"""Complex vectors, line sets, Gram-angle analysis and equivalence moves.

The Gram analysis has two paths: an exact one over the Gaussian integers
(squared magnitudes are compared as rational numbers, tolerance ignored) and
a double-precision one with transitive-closure clustering at a tolerance.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .scalars import Scalar

DEFAULT_TOL = 1e-9


class DimensionMismatch(ValueError):
    pass


class ZeroVectorError(ValueError):
    pass


class NonUnitPhase(ValueError):
    pass


@dataclass(frozen=True)
class CVector:
    entries: tuple[Scalar, ...]

    @staticmethod
    def make(values) -> "CVector":
        return CVector(tuple(Scalar.coerce(v) for v in values))

    @staticmethod
    def gauss(pairs) -> "CVector":
        """Exact vector from (a, b) integer pairs."""
        return CVector(tuple(Scalar.gauss(a, b) for a, b in pairs))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def exact(self) -> bool:
        return all(e.exact for e in self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def norm2(self):
        """Squared norm; an int on the exact path."""
        total = 0
        for e in self.entries:
            total = total + e.abs2()
        return total

    def to_array(self) -> np.ndarray:
        return np.array([e.to_complex() for e in self.entries], dtype=complex)

    def scale(self, factor: Scalar) -> "CVector":
        return CVector(tuple(e * factor for e in self.entries))

    def concat(self, other: "CVector") -> "CVector":
        return CVector(self.entries + other.entries)


def inner(x: CVector, y: CVector) -> Scalar:
    """Standard Hermitian inner product sum x_l * conj(y_l)."""
    if x.dim != y.dim:
        raise DimensionMismatch(f"dims {x.dim} and {y.dim}")
    total = Scalar.gauss(0, 0)
    for a, b in zip(x.entries, y.entries):
        total = total + a * b.conj()
    return total


@dataclass(frozen=True)
class LineSet:
    dim: int
    vectors: tuple[CVector, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for v in self.vectors:
            if v.dim != self.dim:
                raise DimensionMismatch("all vectors must share the set dimension")

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def exact(self) -> bool:
        return all(v.exact for v in self.vectors)

    def to_matrix(self) -> np.ndarray:
        return np.array([v.to_array() for v in self.vectors], dtype=complex)


@dataclass(frozen=True)
class GramReport:
    size: int
    norms: tuple[float, ...]
    angle_clusters: tuple[tuple[float, int], ...]
    equiangular: bool
    common_angle: float | None
    exact: bool

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "norms": list(self.norms),
            "angle_clusters": [[a, m] for a, m in self.angle_clusters],
            "equiangular": self.equiangular,
            "common_angle": self.common_angle,
            "exact": self.exact,
        }


def _cluster_float(values: np.ndarray, tol: float) -> list[tuple[float, int]]:
    """Transitive-closure clustering: sorted values split at gaps > tol."""
    order = np.sort(values)
    clusters = []
    start = 0
    for idx in range(1, len(order) + 1):
        if idx == len(order) or order[idx] - order[idx - 1] > tol:
            chunk = order[start:idx]
            spread = float(chunk[-1] - chunk[0])
            if spread > 10 * tol:
                warnings.warn(
                    f"angle cluster spread {spread:.3e} exceeds 10*tol; "
                    "possible tolerance-chaining artifact",
                    RuntimeWarning,
                )
            clusters.append((float(chunk.mean()), len(chunk)))
            start = idx
    return clusters


def gram_analyze(lines: LineSet, tol: float = DEFAULT_TOL) -> GramReport:
    """Cluster the normalized pairwise inner-product magnitudes.

    Exact (Gaussian-integer) inputs are clustered on rational squared
    magnitudes with the tolerance ignored.
    """
    m = len(lines)
    if m < 2:
        raise ValueError("need at least two vectors")
    for v in lines.vectors:
        if v.is_zero():
            raise ZeroVectorError("line sets may not contain the zero vector")

    if lines.exact:
        norms2 = [v.norm2() for v in lines.vectors]
        counts: dict[Fraction, int] = {}
        for j in range(m):
            for k in range(j + 1, m):
                mag2 = inner(lines.vectors[j], lines.vectors[k]).abs2()
                key = Fraction(mag2, norms2[j] * norms2[k])
                counts[key] = counts.get(key, 0) + 1
        clusters = tuple(
            (math.sqrt(float(key)), counts[key]) for key in sorted(counts)
        )
        equi = len(clusters) == 1
        return GramReport(
            size=m,
            norms=tuple(math.sqrt(n2) for n2 in norms2),
            angle_clusters=clusters,
            equiangular=equi,
            common_angle=clusters[0][0] if equi else None,
            exact=True,
        )

    a = lines.to_matrix()
    gram = a @ a.conj().T
    norms = np.sqrt(np.abs(np.diag(gram)).real)
    normalized = np.abs(gram) / np.outer(norms, norms)
    upper = normalized[np.triu_indices(m, k=1)]
    clusters = tuple(_cluster_float(upper, tol))
    equi = len(clusters) == 1
    return GramReport(
        size=m,
        norms=tuple(float(n) for n in norms),
        angle_clusters=clusters,
        equiangular=equi,
        common_angle=clusters[0][0] if equi else None,
        exact=False,
    )


def verify_mubs(bases: list[LineSet], tol: float = DEFAULT_TOL) -> bool:
    """True iff each basis is orthogonal and all cross-basis normalized
    magnitudes equal 1/sqrt(d)."""
    if not bases:
        raise ValueError("no bases supplied")
    d = bases[0].dim
    for basis in bases:
        if basis.dim != d:
            raise DimensionMismatch("bases live in different dimensions")
        if len(basis) != d:
            raise ValueError(f"a basis of C^{d} must have exactly {d} vectors")

    mats = [b.to_matrix() for b in bases]
    norms = [np.linalg.norm(mat, axis=1) for mat in mats]
    target = 1.0 / math.sqrt(d)
    for bi, (mat, nrm) in enumerate(zip(mats, norms)):
        cross = np.abs(mat @ mat.conj().T) / np.outer(nrm, nrm)
        off = cross[np.triu_indices(d, k=1)]
        if off.size and np.max(off) > tol:
            return False
        for mat2, nrm2 in zip(mats[bi + 1:], norms[bi + 1:]):
            cross = np.abs(mat @ mat2.conj().T) / np.outer(nrm, nrm2)
            if np.max(np.abs(cross - target)) > tol:
                return False
    return True


def max_angle(d: int) -> float:
    """The forced common angle 1/sqrt(d+1) of a d^2-line equiangular set."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    return 1.0 / math.sqrt(d + 1)


def mub_bound(d: int) -> int:
    """Upper bound d+1 on the number of MUBs in C^d."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    return d + 1


def special_bound_f(d) -> float:
    """Bound f(d) = d(2d+1)(2*sqrt(d)+d)^2 / (d^2+4d+2*sqrt(d)) on the number
    of lines in C^(2d) pairwise at angle 1/(1+sqrt(d))."""
    d = np.asarray(d, dtype=float)
    if np.any(d < 1):
        raise ValueError("d must be >= 1")
    s = np.sqrt(d)
    out = d * (2 * d + 1) * (2 * s + d) ** 2 / (d * d + 4 * d + 2 * s)
    return float(out) if out.ndim == 0 else out


# --- equivalence operations -------------------------------------------------


@dataclass(frozen=True)
class EntryPermutation:
    """Permute the entries of every vector; perm[i] is the source index."""

    perm: tuple[int, ...]


@dataclass(frozen=True)
class VectorPhases:
    """Multiply vector j by the unit phase phases[j]."""

    phases: tuple


@dataclass(frozen=True)
class CoordPhases:
    """Multiply entry i of every vector by the unit phase phases[i]."""

    phases: tuple


@dataclass(frozen=True)
class Compose:
    parts: tuple


Transform = EntryPermutation | VectorPhases | CoordPhases | Compose


def _check_unit(phase: Scalar, tol: float) -> Scalar:
    phase = Scalar.coerce(phase)
    if phase.exact:
        if phase.abs2() != 1:
            raise NonUnitPhase(f"{phase} is not a Gaussian unit")
    elif abs(math.sqrt(phase.abs2()) - 1.0) > tol:
        raise NonUnitPhase(f"{phase} does not have magnitude 1")
    return phase


def apply_equivalence(lines: LineSet, transform: Transform,
                      tol: float = DEFAULT_TOL) -> LineSet:
    """Apply one of the three line-set equivalence operations (or a
    composition of them)."""
    if isinstance(transform, Compose):
        out = lines
        for part in transform.parts:
            out = apply_equivalence(out, part, tol)
        return out

    if isinstance(transform, EntryPermutation):
        perm = transform.perm
        if sorted(perm) != list(range(lines.dim)):
            raise ValueError("not a permutation of the entry indices")
        vectors = tuple(
            CVector(tuple(v.entries[i] for i in perm)) for v in lines.vectors
        )
    elif isinstance(transform, VectorPhases):
        if len(transform.phases) != len(lines):
            raise ValueError("need one phase per vector")
        phases = [_check_unit(p, tol) for p in transform.phases]
        vectors = tuple(v.scale(p) for v, p in zip(lines.vectors, phases))
    elif isinstance(transform, CoordPhases):
        if len(transform.phases) != lines.dim:
            raise ValueError("need one phase per coordinate")
        phases = [_check_unit(p, tol) for p in transform.phases]
        vectors = tuple(
            CVector(tuple(e * p for e, p in zip(v.entries, phases)))
            for v in lines.vectors
        )
    else:
        raise TypeError(f"unknown transform {transform!r}")
    return LineSet(lines.dim, vectors, dict(lines.provenance))


def lines_equal(a: LineSet, b: LineSet, tol: float = 1e-8) -> bool:
    """True iff the two sets represent the same lines, matched greedily by
    rank-1 projector (Frobenius) distance, each vector up to a global phase."""
    if a.dim != b.dim or len(a) != len(b):
        return False
    am = a.to_matrix()
    bm = b.to_matrix()
    am = am / np.linalg.norm(am, axis=1, keepdims=True)
    bm = bm / np.linalg.norm(bm, axis=1, keepdims=True)
    # form the rank-1 projectors explicitly; the algebraic shortcut
    # 2 - 2|<x,y>|^2 cancels catastrophically near equality
    pa = am[:, :, None] * am[:, None, :].conj()
    pb = bm[:, :, None] * bm[:, None, :].conj()
    diff = pa[:, None, :, :] - pb[None, :, :, :]
    dist = np.linalg.norm(diff.reshape(len(a), len(b), -1), axis=2)
    unmatched = list(range(len(b)))
    for j in range(len(a)):
        best = min(unmatched, key=lambda k: (dist[j, k], k))
        if dist[j, best] > tol:
            return False
        unmatched.remove(best)
    return True


# --- serialization ----------------------------------------------------------


def lineset_to_json(lines: LineSet) -> dict:
    exact = lines.exact
    return {
        "dim": lines.dim,
        "field": "gaussian-int" if exact else "complex-f64",
        "vectors": [
            [[e.re, e.im] for e in v.entries] for v in lines.vectors
        ],
        "provenance": lines.provenance,
    }


def lineset_from_json(data: dict) -> LineSet:
    dim = int(data["dim"])
    exact = data.get("field") == "gaussian-int"
    scale = data.get("scale")
    vectors = []
    for entries in data["vectors"]:
        if exact and scale is None:
            vec = CVector.gauss([(int(re), int(im)) for re, im in entries])
        else:
            mult = 1.0 if scale is None else float(scale)
            vec = CVector.make([complex(re, im) * mult for re, im in entries])
        vectors.append(vec)
    return LineSet(dim, tuple(vectors), data.get("provenance", {}))


def dump_json(obj: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
