"""Euler-type congruence factors and symbolic leading-term constants.

An ideal is a tuple of (q, e) pairs: residue size and exponent, one pair per
prime.  Gamma factors only see the residue sizes; norms see both.  Constants
that are not rational numbers (volume ratios, motivic L-values) stay as
symbol strings next to the exact rational part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .cohomology import GlobalRep
from .growth import GrowthValue, rep_bound
from .infchar import format_rational, weyl_dim
from .shapes import (
    Shape,
    delta_max,
    is_gsk,
    is_odd_gsk,
    odd_gsk_parity_test,
    sl2_partition,
)

Ideal = tuple[tuple[int, int], ...]


def _check_ideal(ideal) -> Ideal:
    out = tuple((int(q), int(e)) for q, e in ideal)
    if not out:
        raise ValueError("ideal needs at least one prime")
    for q, e in out:
        if q < 2 or e < 1:
            raise ValueError(f"invalid prime power ({q},{e})")
    return out


def ideal_norm(ideal) -> int:
    ideal = _check_ideal(ideal)
    return prod(q**e for q, e in ideal)


def gamma_factor(ns, ideal) -> Fraction:
    """Product over primes and indices of (1 - q^-i), i = 1..n.

    A negative index n flips the sign: (1 + q^-i), i = 1..-n.  Index 0
    contributes nothing.
    """
    ideal = _check_ideal(ideal)
    ns = tuple(int(n) for n in ns)
    value = Fraction(1)
    for q, _ in ideal:
        for n in ns:
            sign = 1 if n < 0 else -1
            for i in range(1, abs(n) + 1):
                value *= 1 + sign * Fraction(1, q**i)
    return value


def index_congruence(n: int, ideal) -> Fraction:
    """|ideal|^(n^2) * Gamma_n(ideal); the congruence-subgroup index scale.

    For a single (q, 1) prime this is the order of GL_n over the size-q
    field.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    ideal = _check_ideal(ideal)
    return ideal_norm(ideal) ** (n * n) * gamma_factor((n,), ideal)


def index_list(shape) -> tuple[int, ...]:
    """Gamma indices (T1, 1^(k-1), -1^(k-1)) of a GSK shape."""
    if not is_gsk(shape):
        raise ValueError("index list only defined for GSK shapes")
    if isinstance(shape, Shape):
        pairs = sorted(((b.T, b.d) for b in shape.blocks), key=lambda td: td[1])
    else:
        pairs = sorted(((int(t), int(d)) for t, d in shape), key=lambda td: td[1])
    t1 = pairs[0][0]
    k = len(pairs)
    return (t1,) + (1,) * (k - 1) + (-1,) * (k - 1)


def packet_size(t: int, convention: str = "binom", ambient: int | None = None) -> int:
    """Number of members dividing a discrete-series contribution.

    "binom" counts the T-choose-floor(T/2) members of a rank-T packet;
    "example1" uses the ambient rank instead.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if convention == "binom":
        return comb(t, t // 2)
    if convention == "example1":
        if ambient is None or ambient < 1:
            raise ValueError("ambient rank required for the example1 convention")
        return ambient
    raise ValueError(f"unknown packet-size convention {convention!r}")


@dataclass(frozen=True)
class LeadingTerm:
    exponent: GrowthValue
    indices: tuple[int, ...]
    coeff: Fraction
    symbols: tuple[str, ...]
    zero: bool

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent.to_json(),
            "L": list(self.indices),
            "coeff": format_rational(self.coeff),
            "symbols": list(self.symbols),
            "zero": self.zero,
        }


def leading_term(rep: GlobalRep, convention: str = "binom") -> LeadingTerm:
    """Exact main-term data for the dominant odd-GSK shapes of a rep.

    The count in question grows like coeff * VOL * norm^exponent *
    Gamma_L(ideal); coeff sums the parity-surviving dominant shapes, each
    contributing its rank-1 block dimension over the packet size at every
    place.
    """
    shapes = delta_max(rep)
    if not all(is_odd_gsk(s) for s in shapes):
        raise ValueError("dominant shapes are not all odd GSK")
    types = {sl2_partition(s) for s in shapes}
    if len(types) != 1:
        raise ValueError("dominant SL(2)-type is not unique")
    value, _ = rep_bound(rep)
    sample = shapes[0]
    pairs = sorted(((b.T, b.d) for b in sample.blocks), key=lambda td: td[1])
    t1, k = pairs[0][0], len(pairs)
    coeff = Fraction(0)
    size = packet_size(t1, convention, rep.rank)
    for s in shapes:
        if not odd_gsk_parity_test(rep, s):
            continue
        block1 = next(b for b in s.blocks if b.d == 1)
        term = Fraction(1)
        for v in range(s.places):
            term *= Fraction(weyl_dim(block1.centers[v]), size)
        coeff += term
    symbols = (f"VOL_RATIO(U({t1})xU(1)^{k - 1})",)
    return LeadingTerm(
        exponent=value,
        indices=index_list(sample),
        coeff=coeff,
        symbols=symbols,
        zero=coeff == 0,
    )


def tamagawa_elementary(
    n: int, deg_f: int, signatures
) -> tuple[Fraction, tuple[str, ...]]:
    """Elementary part of the volume constant for a rank-n form.

    signatures lists one (p, q) per archimedean place; exactly deg_f of
    them.  The transcendental factors stay symbolic.
    """
    sigs = tuple((int(p), int(q)) for p, q in signatures)
    if len(sigs) != deg_f:
        raise ValueError(
            f"need exactly {deg_f} signatures, got {len(sigs)}"
        )
    for p, q in sigs:
        if p < 0 or q < 0 or p + q != n:
            raise ValueError(f"signature ({p},{q}) does not have rank {n}")
    value = Fraction(factorial(n) ** deg_f, 2 ** ((n - 1) * deg_f))
    for p, q in sigs:
        value /= factorial(p) * factorial(q)
    return value, ("TAU", "L_MOT")
