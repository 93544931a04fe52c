"""Exact-rational order on an open interval, where all six axioms hold.

Existential axioms are discharged by explicit witness functions: the
midpoint gives an element strictly between two others, and midpoints
toward the interval bounds give strict successors and predecessors.
All comparisons are exact (``fractions.Fraction``), never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import rng
from .axioms import (
    AdjacentGap,
    AxiomId,
    AxiomVerdict,
    BrokenTriple,
    Exhaustive,
    IncomparablePair,
    MaxElement,
    MinElement,
    SelfLoop,
    check_numeric,
)
from .simulate import SampleSet, clip, round_half_even

Rational = Fraction

PROBE_DENOMINATOR = 10**6


@dataclass(frozen=True)
class OpenInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got ({self.lo}, {self.hi})")

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


LIKERT_OPEN = OpenInterval(Fraction(1), Fraction(5))


def density_witness(a: Fraction, b: Fraction) -> Fraction:
    if not a < b:
        raise ValueError(f"density witness needs a < b, got a={a}, b={b}")
    return (Fraction(a) + Fraction(b)) / 2


def above_witness(a: Fraction, iv: OpenInterval = LIKERT_OPEN) -> Fraction:
    if a not in iv:
        raise ValueError(f"{a} is not inside the open interval ({iv.lo}, {iv.hi})")
    return (Fraction(a) + iv.hi) / 2


def below_witness(a: Fraction, iv: OpenInterval = LIKERT_OPEN) -> Fraction:
    if a not in iv:
        raise ValueError(f"{a} is not inside the open interval ({iv.lo}, {iv.hi})")
    return (iv.lo + Fraction(a)) / 2


def bisect_chain(a: Fraction, b: Fraction, k: int) -> list[OpenInterval]:
    """``(a, b)`` followed by ``k`` successive left halves (k + 1 intervals)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    iv = OpenInterval(a, b)
    chain = [iv]
    for _ in range(k):
        iv = OpenInterval(iv.lo, density_witness(iv.lo, iv.hi))
        chain.append(iv)
    return chain


def draw_probes(iv: OpenInterval, probes: int, seed: int) -> list[Fraction]:
    """Points ``lo + width * j / 10**6`` with ``j`` uniform in ``[1, 10**6 - 1]``."""
    if probes < 1:
        raise ValueError(f"probes must be >= 1, got {probes}")
    state = rng.seed_scalar(seed)
    out = []
    for _ in range(probes):
        j = 1 + int(rng.next_double53(state) * (PROBE_DENOMINATOR - 1))
        out.append(iv.lo + iv.width * Fraction(j, PROBE_DENOMINATOR))
    return out


def _sampled_indices(state: rng.TwisterState, m: int, arity: int) -> list[tuple[int, ...]]:
    windows = [tuple(range(i, i + arity)) for i in range(m - arity + 1)]
    drawn = [tuple(rng.next_u32(state) % m for _ in range(arity)) for _ in range(m)]
    return windows + drawn


def check_ideal(iv: OpenInterval, points: list[Fraction], seed: int = 0) -> list[AxiomVerdict]:
    """Check all six axioms on ``points`` as elements of ``iv``.

    A1 is checked on every point. A2 and A3 are checked on consecutive
    windows plus ``len(points)`` randomly drawn pairs/triples (each triple in
    all six orders). A4-A6 are checked by calling the witness functions and
    confirming their outputs exactly: the successor/predecessor of every
    point, and the midpoint of every sampled ordered pair together with the
    pairs (p, successor(p)) and (predecessor(p), p).
    """
    if not points:
        raise ValueError("need at least one point")
    for p in points:
        if p not in iv:
            raise ValueError(f"point {p} lies outside ({iv.lo}, {iv.hi})")
    m = len(points)
    state = rng.seed_scalar(seed)

    def verdict(axiom, bad, witness_cls, count, method):
        if bad is None:
            return AxiomVerdict(axiom, True, Exhaustive(count, method), count)
        return AxiomVerdict(axiom, False, witness_cls(*bad), count)

    loop = next(((p,) for p in points if p < p), None)
    out = [verdict(AxiomId.A1_Irreflexivity, loop, SelfLoop, m, "every-point")]

    triples = [(points[i], points[j], points[k]) for i, j, k in _sampled_indices(state, m, 3)]
    ordered_triples = [abc for t in triples for abc in permutations(t)]
    broken = next(((a, b, c) for a, b, c in ordered_triples if a < b and b < c and not a < c), None)
    out.append(verdict(AxiomId.A2_Transitivity, broken, BrokenTriple, len(ordered_triples), "sampled-triples"))

    pairs = [(points[i], points[j]) for i, j in _sampled_indices(state, m, 2)]
    bad = next(((a, b) for a, b in pairs if not (a < b or b < a or a == b)), None)
    out.append(verdict(AxiomId.A3_Comparability, bad, IncomparablePair, len(pairs), "sampled-pairs"))

    ups = [above_witness(p, iv) for p in points]
    top = next(((p,) for p, u in zip(points, ups) if not (p < u and u in iv)), None)
    out.append(verdict(AxiomId.A4_NoGreatest, top, MaxElement, m, "constructive:above_witness"))

    downs = [below_witness(p, iv) for p in points]
    bottom = next(((p,) for p, d in zip(points, downs) if not (d < p and d in iv)), None)
    out.append(verdict(AxiomId.A5_NoLeast, bottom, MinElement, m, "constructive:below_witness"))

    ordered = [(min(a, b), max(a, b)) for a, b in pairs if a != b]
    ordered += [(a, b) for a, b in zip(points, ups) if a < b]
    ordered += [(a, b) for a, b in zip(downs, points) if a < b]
    gap = None
    for a, b in ordered:
        c = density_witness(a, b)
        if not (a < c < b and c in iv):
            gap = (a, b)
            break
    out.append(verdict(AxiomId.A6_Density, gap, AdjacentGap, len(ordered), "constructive:density_witness"))
    return out


def verify_ideal_axioms(iv: OpenInterval = LIKERT_OPEN, probes: int = 1000, seed: int = 42) -> list[AxiomVerdict]:
    return check_ideal(iv, draw_probes(iv, probes, seed), seed)


def quantized_projection(points: list[Fraction], lo: float = 1.0, hi: float = 5.0, decimals: int = 4, name: str = "quantized projection") -> SampleSet:
    """What a finite measurement keeps of the points: clipped, rounded doubles."""
    return SampleSet(name, [round_half_even(clip(float(p), lo, hi), decimals) for p in points])


@dataclass(frozen=True)
class Contrast:
    probes: tuple[Fraction, ...]
    ideal: tuple[AxiomVerdict, ...]
    projected: tuple[AxiomVerdict, ...]


def contrast(iv: OpenInterval = LIKERT_OPEN, probes: int = 1000, seed: int = 42, decimals: int = 4) -> Contrast:
    """Same probes, two readings: exact rationals in ``iv`` vs their 4-decimal projection."""
    points = draw_probes(iv, probes, seed)
    ideal = check_ideal(iv, points, seed)
    projected = check_numeric(quantized_projection(points, float(iv.lo), float(iv.hi), decimals))
    return Contrast(tuple(points), tuple(ideal), tuple(projected))
