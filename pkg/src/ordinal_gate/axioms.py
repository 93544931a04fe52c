"""Dense-linear-order axioms checked over finite structures.

Two evaluation paths share one verdict format:

* ``check_numeric`` handles samples of real numbers. Real ``<`` is a strict
  total order, so sorting plus linear scans settle every axiom in
  O(n log n). This is the path used on the 10,000-value datasets.
* ``check_relation`` evaluates the quantifiers literally over an explicit
  set of ordered pairs. It is cubic in the domain size and exists so the
  engine can be shown to reject structures that are not linear orders.

Every verdict carries a witness. A failing verdict's witness is the first
counterexample in sorted (numeric) or domain (relation) order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .simulate import SampleSet


class AxiomId(enum.Enum):
    A1_Irreflexivity = "A1"
    A2_Transitivity = "A2"
    A3_Comparability = "A3"
    A4_NoGreatest = "A4"
    A5_NoLeast = "A5"
    A6_Density = "A6"

    @property
    def short(self) -> str:
        return self.value


AXIOMS = tuple(AxiomId)


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class SelfLoop:
    a: Hashable
    kind = "self_loop"

    def to_json(self):
        return {"kind": self.kind, "value": self.a}


@dataclass(frozen=True)
class BrokenTriple:
    a: Hashable
    b: Hashable
    c: Hashable
    kind = "broken_triple"

    def to_json(self):
        return {"kind": self.kind, "a": self.a, "b": self.b, "c": self.c}


@dataclass(frozen=True)
class IncomparablePair:
    a: Hashable
    b: Hashable
    kind = "incomparable_pair"

    def to_json(self):
        return {"kind": self.kind, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class MaxElement:
    a: Hashable
    kind = "max_element"

    def to_json(self):
        return {"kind": self.kind, "value": self.a}


@dataclass(frozen=True)
class MinElement:
    a: Hashable
    kind = "min_element"

    def to_json(self):
        return {"kind": self.kind, "value": self.a}


@dataclass(frozen=True)
class AdjacentGap:
    """``a < b`` with nothing strictly between them in the structure."""

    a: Hashable
    b: Hashable
    kind = "adjacent_gap"

    def to_json(self):
        return {"kind": self.kind, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class Vacuous:
    kind = "vacuous"

    def to_json(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class Exhaustive:
    count: int
    method: str = "scan"
    kind = "exhaustive"

    def to_json(self):
        return {"kind": self.kind, "count": self.count, "method": self.method}


Witness = SelfLoop | BrokenTriple | IncomparablePair | MaxElement | MinElement | AdjacentGap | Vacuous | Exhaustive


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: AxiomId
    passed: bool
    witness: Witness
    checked: int

    def to_json(self):
        return {
            "axiom": self.axiom.short,
            "passed": self.passed,
            "witness": self.witness.to_json(),
            "checked": self.checked,
        }


# -- numeric path ------------------------------------------------------------


def _values(sample: SampleSet | Iterable[float]) -> list[float]:
    values = list(sample.values if isinstance(sample, SampleSet) else sample)
    if any(isinstance(v, float) and math.isnan(v) for v in values):
        raise ValueError("NaN is not ordered by '<'; numeric path needs a total order")
    return values


def sorted_distinct(sample: SampleSet | Iterable[float]) -> list[float]:
    return sorted(set(_values(sample)))


def adjacent_gaps(sample: SampleSet | Iterable[float]) -> Iterator[tuple[float, float]]:
    """Every pair of neighbours in the sorted distinct values.

    Each such pair refutes density: no sample value lies strictly between.
    """
    xs = sorted_distinct(sample)
    return zip(xs, xs[1:])


def check_numeric(sample: SampleSet | Iterable[float]) -> list[AxiomVerdict]:
    values = _values(sample)
    if not values:
        raise ValueError("cannot check axioms on an empty sample")
    n = len(values)
    xs = sorted(set(values))
    d = len(xs)

    # A1: no value below itself
    loop = next((x for x in xs if x < x), None)
    a1 = AxiomVerdict(
        AxiomId.A1_Irreflexivity,
        loop is None,
        Exhaustive(d) if loop is None else SelfLoop(loop),
        d,
    )

    # A2/A3: neighbours in sorted order must be strictly increasing; on a
    # strictly increasing chain every triple/pair follows from the neighbours
    steps = sum(1 for a, b in zip(xs, xs[1:]) if a < b)
    if d < 3:
        a2 = AxiomVerdict(AxiomId.A2_Transitivity, True, Vacuous(), 0)
    else:
        broken = next(
            ((a, b, c) for a, b, c in zip(xs, xs[1:], xs[2:]) if a < b < c and not a < c),
            None,
        )
        a2 = AxiomVerdict(
            AxiomId.A2_Transitivity,
            broken is None,
            Exhaustive(d - 2, "sorted-triples") if broken is None else BrokenTriple(*broken),
            d - 2,
        )
    bad_pair = next(((a, b) for a, b in zip(xs, xs[1:]) if not (a < b or b < a or a == b)), None)
    a3 = AxiomVerdict(
        AxiomId.A3_Comparability,
        bad_pair is None and steps == d - 1,
        Exhaustive(d - 1, "sorted-neighbours") if bad_pair is None else IncomparablePair(*bad_pair),
        d - 1,
    )

    # A4/A5: a finite nonempty sample always has extremes
    a4 = AxiomVerdict(AxiomId.A4_NoGreatest, False, MaxElement(xs[-1]), n)
    a5 = AxiomVerdict(AxiomId.A5_NoLeast, False, MinElement(xs[0]), n)

    # A6: the first neighbour pair already has no intermediate
    if d < 2:
        a6 = AxiomVerdict(AxiomId.A6_Density, True, Vacuous(), 0)
    else:
        a6 = AxiomVerdict(AxiomId.A6_Density, False, AdjacentGap(xs[0], xs[1]), d - 1)
    return [a1, a2, a3, a4, a5, a6]


# -- relation path -----------------------------------------------------------


@dataclass(frozen=True)
class FiniteRelation:
    """A strict relation given extensionally as ordered pairs."""

    domain: tuple[Hashable, ...]
    pairs: frozenset[tuple[Hashable, Hashable]]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("domain elements must be distinct")
        members = set(self.domain)
        for a, b in sorted(self.pairs, key=repr):
            if a not in members or b not in members:
                raise ValueError(f"pair ({a!r}, {b!r}) references an element outside the domain")

    @classmethod
    def from_numbers(cls, values: Iterable[float]) -> FiniteRelation:
        """``{(a, b) : a < b}`` over the distinct values, in ascending order."""
        xs = sorted(set(values))
        return cls(tuple(xs), frozenset((a, b) for i, a in enumerate(xs) for b in xs[i + 1 :]))

    def less(self, a, b) -> bool:
        return (a, b) in self.pairs


def check_relation(rel: FiniteRelation) -> list[AxiomVerdict]:
    """Literal quantifier evaluation; O(|domain|^3) time."""
    dom = rel.domain
    lt = rel.pairs
    succ = {a: [b for b in dom if (a, b) in lt] for a in dom}

    loop = next((a for a in dom if (a, a) in lt), None)
    a1 = AxiomVerdict(
        AxiomId.A1_Irreflexivity,
        loop is None,
        Exhaustive(len(dom)) if loop is None else SelfLoop(loop),
        len(dom),
    )

    triples = 0
    broken = None
    for a in dom:
        for b in succ[a]:
            for c in succ[b]:
                triples += 1
                if (a, c) not in lt:
                    broken = (a, b, c)
                    break
            if broken:
                break
        if broken:
            break
    if broken:
        a2 = AxiomVerdict(AxiomId.A2_Transitivity, False, BrokenTriple(*broken), triples)
    else:
        a2 = AxiomVerdict(
            AxiomId.A2_Transitivity, True, Exhaustive(triples) if triples else Vacuous(), triples
        )

    pairs_seen = 0
    bad = None
    for i, a in enumerate(dom):
        for b in dom[i + 1 :]:
            pairs_seen += 1
            if not ((a, b) in lt or (b, a) in lt):
                bad = (a, b)
                break
        if bad:
            break
    a3 = AxiomVerdict(
        AxiomId.A3_Comparability,
        bad is None,
        Exhaustive(pairs_seen) if bad is None else IncomparablePair(*bad),
        pairs_seen,
    )

    top = next((a for a in dom if not succ[a]), None)
    a4 = AxiomVerdict(
        AxiomId.A4_NoGreatest,
        top is None,
        Exhaustive(len(dom)) if top is None else MaxElement(top),
        len(dom),
    )
    has_pred = {b for (_, b) in lt}
    bottom = next((a for a in dom if a not in has_pred), None)
    a5 = AxiomVerdict(
        AxiomId.A5_NoLeast,
        bottom is None,
        Exhaustive(len(dom)) if bottom is None else MinElement(bottom),
        len(dom),
    )

    examined = 0
    gap = None
    for a in dom:
        for b in succ[a]:
            examined += 1
            if not any((c, b) in lt for c in succ[a]):
                gap = (a, b)
                break
        if gap:
            break
    if gap:
        a6 = AxiomVerdict(AxiomId.A6_Density, False, AdjacentGap(*gap), examined)
    else:
        a6 = AxiomVerdict(
            AxiomId.A6_Density, True, Exhaustive(examined) if examined else Vacuous(), examined
        )
    return [a1, a2, a3, a4, a5, a6]


# -- matrix ------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomMatrix:
    rows: tuple[str, ...]
    cells: tuple[tuple[AxiomVerdict, ...], ...]

    def passed(self) -> list[list[bool]]:
        return [[v.passed for v in row] for row in self.cells]

    def to_json(self):
        return [
            {"name": name, "verdicts": [v.to_json() for v in row]}
            for name, row in zip(self.rows, self.cells)
        ]

    def render(self) -> str:
        """Text table with one row per structure and a True/False column per axiom."""
        width = max((len(r) for r in self.rows), default=0)
        head = " " * width + "".join(f"  {a.short:>5}" for a in AXIOMS)
        lines = [head]
        for name, row in zip(self.rows, self.cells):
            lines.append(name.ljust(width) + "".join(f"  {str(v.passed):>5}" for v in row))
        return "\n".join(lines)


def check_all(samples: Sequence[SampleSet]) -> AxiomMatrix:
    rows = []
    cells = []
    for i, s in enumerate(samples):
        rows.append(s.theme if isinstance(s, SampleSet) else f"sample {i}")
        cells.append(tuple(check_numeric(s)))
    return AxiomMatrix(tuple(rows), tuple(cells))
