"""Finite abelian groups as products of cyclic factors, their characters,
and relative-difference-set verification.

Groups are only ever presented as explicit products Z_{n_1} x ... x Z_{n_k};
no structure computation from abstract presentations is attempted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import Scalar, root_of_unity


class RdsError(ValueError):
    """A claimed relative difference set failed verification."""


class QuotientInN(RdsError):
    """Some quotient r1*r2^-1 lands in the forbidden subgroup."""


class UnevenCover(RdsError):
    """The quotients do not cover G\\N with constant multiplicity."""


class UnsupportedDimension(ValueError):
    """No builtin RDS is available for the requested dimension."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups of the given factor orders."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(n < 1 for n in self.orders):
            raise ValueError("factor orders must all be >= 1")
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def element(self, exponents) -> "GroupElement":
        return GroupElement(self, tuple(int(e) for e in exponents))

    def identity(self) -> "GroupElement":
        return self.element((0,) * len(self.orders))


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.group.orders):
            raise ValueError("exponent tuple length does not match the group")
        reduced = tuple(e % n for e, n in zip(self.exponents, self.group.orders))
        object.__setattr__(self, "exponents", reduced)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements belong to different groups")
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-e for e in self.exponents))


@dataclass(frozen=True)
class Character:
    """chi(g) = prod_i zeta_{n_i}^{j_i * e_i}, the j_i being this tuple."""

    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.group.orders):
            raise ValueError("character exponent length does not match the group")
        reduced = tuple(j % n for j, n in zip(self.exponents, self.group.orders))
        object.__setattr__(self, "exponents", reduced)

    def __call__(self, g: GroupElement) -> Scalar:
        return char_eval(self, g)

    def phase_fraction(self, g: GroupElement) -> Fraction:
        """Exponent t of chi(g) = e^(2*pi*i*t), reduced into [0, 1)."""
        if g.group != self.group:
            raise ValueError("element and character belong to different groups")
        t = sum(
            Fraction(j * e, n)
            for j, e, n in zip(self.exponents, g.exponents, self.group.orders)
        )
        return t % 1


def enumerate_elements(group: FiniteAbelianGroup) -> list[GroupElement]:
    """All |G| elements in lexicographic order of their exponent tuples."""
    return [
        GroupElement(group, exps)
        for exps in itertools.product(*(range(n) for n in group.orders))
    ]


def characters(group: FiniteAbelianGroup) -> list[Character]:
    """All |G| characters, lexicographic by exponent tuple."""
    return [
        Character(group, exps)
        for exps in itertools.product(*(range(n) for n in group.orders))
    ]


def char_eval(chi: Character, g: GroupElement) -> Scalar:
    """Evaluate a character; exact Gaussian integer when every n_i divides 4."""
    if g.group != chi.group:
        raise ValueError("element and character belong to different groups")
    t = chi.phase_fraction(g)
    return root_of_unity(t.numerator, t.denominator)


def _subgroup_closure(group: FiniteAbelianGroup, generators) -> set[tuple[int, ...]]:
    seen = {group.identity().exponents}
    frontier = [group.identity()]
    gens = [g if isinstance(g, GroupElement) else group.element(g) for g in generators]
    while frontier:
        current = frontier.pop()
        for gen in gens:
            nxt = current * gen
            if nxt.exponents not in seen:
                seen.add(nxt.exponents)
                frontier.append(nxt)
    return seen


@dataclass(frozen=True)
class RelativeDifferenceSet:
    """An (m, n, k, lambda)-RDS candidate; call rds_verify to validate."""

    group: FiniteAbelianGroup
    forbidden: tuple[GroupElement, ...]
    elements: tuple[GroupElement, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        for g in self.forbidden + self.elements:
            if g.group != self.group:
                raise ValueError("RDS data must live in the stated group")

    def forbidden_subgroup(self) -> set[tuple[int, ...]]:
        return _subgroup_closure(self.group, self.forbidden)


def rds_verify(rds: RelativeDifferenceSet) -> tuple[int, int, int, int]:
    """Brute-force check of the RDS axioms over all k(k-1) quotients.

    Returns (m, n, k, lambda); raises QuotientInN or UnevenCover on failure.
    """
    subgroup = rds.forbidden_subgroup()
    n = len(subgroup)
    v = rds.group.order
    if v % n != 0:
        raise RdsError(f"subgroup order {n} does not divide group order {v}")
    m = v // n
    k = len(rds.elements)
    if len({g.exponents for g in rds.elements}) != k:
        raise RdsError("repeated elements in the difference set")

    counts: dict[tuple[int, ...], int] = {}
    for r1, r2 in itertools.permutations(rds.elements, 2):
        q = (r1 * r2.inverse()).exponents
        if q in subgroup:
            raise QuotientInN(
                f"quotient {q} of distinct elements lies in the forbidden subgroup"
            )
        counts[q] = counts.get(q, 0) + 1

    outside = v - n
    if k >= 2:
        multiplicities = set(counts.values())
        if len(counts) != outside or len(multiplicities) != 1:
            raise UnevenCover("quotients do not cover G\\N evenly")
        lam = multiplicities.pop()
    else:
        lam = 0
    if k * (k - 1) != lam * outside:
        raise UnevenCover("quotient count inconsistent with (m,n,k,lambda)")
    return (m, n, k, lam)


#: largest odd prime for which builtin_rds will synthesize the {(x, x^2)} family
BUILTIN_PRIME_LIMIT = 97


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, int(math.isqrt(p)) + 1, 2))


def builtin_rds(d: int) -> RelativeDifferenceSet:
    """The stock (d,d,d,1)-RDS for d in {2, 3, 4} or an odd prime.

    d=2: {1, x} in Z4 relative to <x^2>.
    d=3: {1, y, x*y^2} in Z3 x Z3 relative to <x>.
    d=4: {1, x, y, x^3*y^3} in Z4 x Z4 relative to <x^2, y^2>.
    odd prime p: {(x, x^2) : x in Z_p} in Z_p x Z_p relative to {0} x Z_p.

    Every result is re-validated by rds_verify before being returned.
    """
    if d == 2:
        group = FiniteAbelianGroup((4,))
        rds = RelativeDifferenceSet(
            group,
            forbidden=(group.element((2,)),),
            elements=(group.element((0,)), group.element((1,))),
            label="builtin:2",
        )
    elif d == 3:
        group = FiniteAbelianGroup((3, 3))
        rds = RelativeDifferenceSet(
            group,
            forbidden=(group.element((1, 0)),),
            elements=(
                group.element((0, 0)),
                group.element((0, 1)),
                group.element((1, 2)),
            ),
            label="builtin:3",
        )
    elif d == 4:
        group = FiniteAbelianGroup((4, 4))
        rds = RelativeDifferenceSet(
            group,
            forbidden=(group.element((2, 0)), group.element((0, 2))),
            elements=(
                group.element((0, 0)),
                group.element((1, 0)),
                group.element((0, 1)),
                group.element((3, 3)),
            ),
            label="builtin:4",
        )
    elif _is_odd_prime(d) and d <= BUILTIN_PRIME_LIMIT:
        group = FiniteAbelianGroup((d, d))
        rds = RelativeDifferenceSet(
            group,
            forbidden=(group.element((0, 1)),),
            elements=tuple(group.element((x, x * x % d)) for x in range(d)),
            label=f"builtin:{d}",
        )
    else:
        raise UnsupportedDimension(
            f"no builtin RDS for d={d}; supply one via the JSON file format"
        )
    params = rds_verify(rds)
    if params != (d, d, d, 1):
        raise RdsError(f"builtin RDS for d={d} verified as {params}")
    return rds


_WORD_LETTERS = "xyzw"


def parse_group_word(group: FiniteAbelianGroup, text: str) -> GroupElement:
    """Parse multiplicative notation like "1", "x", "y^2" or "x^3 y^3" into
    an exponent tuple; letters x, y, z, w name the cyclic factors in order."""
    import re

    text = text.strip()
    exponents = [0] * len(group.orders)
    if text == "1":
        return group.element(exponents)
    pattern = re.compile(r"([a-z])(?:\^(-?\d+))?")
    pos = 0
    for match in pattern.finditer(text.replace(" ", "").replace("*", "")):
        if match.start() != pos:
            raise ValueError(f"cannot parse group word {text!r}")
        pos = match.end()
        letter, power = match.group(1), match.group(2)
        idx = _WORD_LETTERS.find(letter)
        if idx < 0 or idx >= len(group.orders):
            raise ValueError(f"unknown generator {letter!r} in {text!r}")
        exponents[idx] += int(power) if power is not None else 1
    if pos != len(text.replace(" ", "").replace("*", "")):
        raise ValueError(f"cannot parse group word {text!r}")
    return group.element(exponents)


def rds_to_json(rds: RelativeDifferenceSet) -> dict:
    return {
        "orders": list(rds.group.orders),
        "forbidden": [list(g.exponents) for g in rds.forbidden],
        "elements": [list(g.exponents) for g in rds.elements],
    }


def rds_from_json(data: dict) -> RelativeDifferenceSet:
    group = FiniteAbelianGroup(tuple(data["orders"]))
    return RelativeDifferenceSet(
        group,
        forbidden=tuple(group.element(e) for e in data["forbidden"]),
        elements=tuple(group.element(e) for e in data["elements"]),
        label="file",
    )
