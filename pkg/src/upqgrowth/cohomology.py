"""Representation records and their Hodge-type cohomology profiles.

A LocalRep packages a signature (p, q), a reduced bipartition of it, and an
adapted regular integral infinitesimal character.  The cohomology profile of
a rep is determined by the bipartition alone:

* lowest degree  R      = p*q - sum(p_i * q_i)
* holomorphic shift R+  = sum over i < j of p_i * q_j
* antiholomorphic   R-  = sum over i > j of p_i * q_j
* nonzero degrees       = R + 2*t for 0 <= t <= sum(p_i * q_i)
* weight in degree R+2t = (R+ + t, R- + t)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import infchar, partitions
from .infchar import Character, as_character, format_rational
from .partitions import Bipartition


@dataclass(frozen=True)
class LocalRep:
    p: int
    q: int
    blocks: Bipartition
    lam: Character

    def __post_init__(self):
        partitions.validate_bipartition(self.blocks)
        if not partitions.is_reduced(self.blocks):
            raise ValueError(f"bipartition {self.blocks} is not reduced")
        ps = sum(x for x, _ in self.blocks)
        qs = sum(y for _, y in self.blocks)
        if (ps, qs) != (self.p, self.q):
            raise ValueError(
                f"bipartition totals ({ps},{qs}) do not match signature "
                f"({self.p},{self.q})"
            )
        lam = as_character(self.lam)
        object.__setattr__(self, "lam", lam)
        if not infchar.is_regular_integral(lam):
            raise ValueError("infinitesimal character must be regular integral")
        if not infchar.is_adapted(lam, partitions.block_sums(self.blocks)):
            raise ValueError("character is not adapted to the bipartition")

    @property
    def rank(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class GlobalRep:
    places: tuple[LocalRep, ...]

    def __post_init__(self):
        if not self.places:
            raise ValueError("need at least one place")
        ranks = {r.rank for r in self.places}
        if len(ranks) != 1:
            raise ValueError(f"places have mixed ranks {sorted(ranks)}")

    @property
    def rank(self) -> int:
        return self.places[0].rank


@dataclass(frozen=True)
class HodgeProfile:
    lowest: int
    plus: int
    minus: int
    maxshift: int

    @property
    def highest(self) -> int:
        return self.lowest + 2 * self.maxshift

    def contains_degree(self, degree: int) -> bool:
        off = degree - self.lowest
        return off >= 0 and off % 2 == 0 and off // 2 <= self.maxshift

    def weight_in_degree(self, degree: int) -> tuple[int, int]:
        if not self.contains_degree(degree):
            raise ValueError(f"no cohomology in degree {degree}")
        t = (degree - self.lowest) // 2
        return (self.plus + t, self.minus + t)

    def contains_weight(self, a: int, b: int) -> bool:
        t = a - self.plus
        return t >= 0 and t <= self.maxshift and b - self.minus == t


def hodge_profile(blocks: Bipartition) -> HodgeProfile:
    partitions.validate_bipartition(blocks)
    p = sum(x for x, _ in blocks)
    q = sum(y for _, y in blocks)
    cross = sum(x * y for x, y in blocks)
    plus = sum(
        blocks[i][0] * blocks[j][1]
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
    )
    minus = sum(
        blocks[i][0] * blocks[j][1]
        for i in range(len(blocks))
        for j in range(i)
    )
    return HodgeProfile(lowest=p * q - cross, plus=plus, minus=minus, maxshift=cross)


def lowest_degree(d: int, n: int, r: int) -> int:
    """Smallest cohomological degree over the rank-n family for length-d blocks.

    Requires d odd, 1 < d <= n, 0 <= r <= n/2.  The two regimes meet at
    r = (d-1)/2.
    """
    if d <= 1 or d % 2 == 0:
        raise ValueError("block length must be odd and > 1")
    if d > n:
        raise ValueError("block length exceeds rank")
    if r < 0 or 2 * r > n:
        raise ValueError("need 0 <= r <= n/2")
    if 2 * r >= d - 1:
        return r * (n - r) - (d * d - 1) // 4
    return r * (n - d)


def reps_with_hodge_weight(
    p: int, q: int, lam: Character, a: int, b: int
) -> list[Bipartition]:
    """Reduced bipartitions adapted to lam whose profile contains weight (a, b)."""
    lam = as_character(lam)
    if len(lam) != p + q:
        raise ValueError("character rank does not match signature")
    out = []
    for blocks in partitions.reduced_bipartitions(p, q):
        if not infchar.is_adapted(lam, partitions.block_sums(blocks)):
            continue
        if hodge_profile(blocks).contains_weight(a, b):
            out.append(blocks)
    return out


def reps_in_degree(p: int, q: int, lam: Character, degree: int) -> list[Bipartition]:
    """Reduced bipartitions adapted to lam with cohomology in the given degree."""
    lam = as_character(lam)
    if len(lam) != p + q:
        raise ValueError("character rank does not match signature")
    out = []
    for blocks in partitions.reduced_bipartitions(p, q):
        if not infchar.is_adapted(lam, partitions.block_sums(blocks)):
            continue
        if hodge_profile(blocks).contains_degree(degree):
            out.append(blocks)
    return out


# --- JSON converters -------------------------------------------------------


def local_rep_to_json(rep: LocalRep) -> dict:
    return {
        "signature": [rep.p, rep.q],
        "bipartition": [[x, y] for x, y in rep.blocks],
        "infchar": [format_rational(v) for v in rep.lam],
    }


def local_rep_from_json(data: dict) -> LocalRep:
    p, q = (int(v) for v in data["signature"])
    blocks = tuple((int(x), int(y)) for x, y in data["bipartition"])
    lam = tuple(Fraction(s) for s in data["infchar"])
    return LocalRep(p=p, q=q, blocks=blocks, lam=lam)


def global_rep_to_json(rep: GlobalRep) -> dict:
    return {"places": [local_rep_to_json(r) for r in rep.places]}


def global_rep_from_json(data: dict) -> GlobalRep:
    if "places" in data:
        places = tuple(local_rep_from_json(d) for d in data["places"])
    else:
        places = (local_rep_from_json(data),)
    return GlobalRep(places=places)
