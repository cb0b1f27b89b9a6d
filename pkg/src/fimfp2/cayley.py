"""Finite balls of the right Cayley digraph of M over ``{x, y}``.

The spanning tree T consists of the arcs that extend a normal-form word by one
letter; every other arc is either inside a strongly connected component
("strong", weight 0) or a transition arc ``x^n y^k x^k --x--> x^(n+1) y^(k+1) x^(k+1)``
whose weight is ``k``.  Arcs are identified by ``(source, generator)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .monogenic import (
    GENERATORS,
    IDENTITY,
    Interval,
    TypeI,
    element_label,
    element_word,
    enumerate_ball,
    normal_form,
    parse_element,
    right_mult,
)
from .report import VerificationReport


@dataclass(frozen=True, slots=True)
class EdgeRef:
    source: Interval
    gen: str

    def __post_init__(self) -> None:
        if self.gen not in GENERATORS:
            raise ValueError(f"generator must be 'x' or 'y', got {self.gen!r}")

    @property
    def target(self) -> Interval:
        return right_mult(self.source, self.gen)

    @property
    def sort_key(self) -> tuple:
        return (self.source.sort_key, self.gen)

    def label(self) -> str:
        return f"{element_label(self.source)}:{self.gen}"

    def to_json(self) -> dict:
        return {"source": element_label(self.source), "gen": self.gen}

    def __str__(self) -> str:
        return f"{element_label(self.source)} --{self.gen}--> {element_label(self.target)}"


class EdgeKind(enum.Enum):
    TREE = "tree"
    STRONG = "strong"
    TRANSITION = "transition"


@dataclass(frozen=True, slots=True)
class EdgeClass:
    kind: EdgeKind
    weight: int | None = None

    def to_json(self) -> dict:
        data: dict = {"class": self.kind.value}
        if self.weight is not None:
            data["weight"] = self.weight
        return data


TREE = EdgeClass(EdgeKind.TREE)
STRONG = EdgeClass(EdgeKind.STRONG, 0)


def parse_edge(text: str) -> EdgeRef:
    """Parse ``"<normal form>:<gen>"``, e.g. ``"x^1 y^2 x^2:x"``."""
    head, sep, gen = text.rpartition(":")
    if not sep:
        raise ValueError(f"edge spec {text!r} must look like '<word>:<gen>'")
    return EdgeRef(parse_element(head), gen.strip())


def classify_edge(e: EdgeRef) -> EdgeClass:
    """Classify an arc by the normal form of its source."""
    f = normal_form(e.source)
    if isinstance(f, TypeI):
        if e.gen == "y" or f.k == 0:
            return TREE
        return STRONG
    if e.gen == "x":
        if f.j < f.k:
            return TREE
        return EdgeClass(EdgeKind.TRANSITION, f.k)
    if f.j == 0:
        return TREE
    return STRONG


def scc_key(m: Interval) -> tuple[int, int]:
    """Strongly connected components of the Cayley digraph are the fibres of this key."""
    return (m.a, m.b)


def is_transition(e: EdgeRef) -> bool:
    """True when the endpoints lie in different strong components (tree arcs included)."""
    return scc_key(e.source) != scc_key(e.target)


def is_tree_edge_oracle(e: EdgeRef) -> bool:
    return element_word(e.target) == element_word(e.source) + e.gen


# --- paths -------------------------------------------------------------------

Step = tuple[EdgeRef, bool]


@dataclass(frozen=True)
class Path:
    """A walk in the Cayley digraph; each step is an arc and a forward flag."""

    start: Interval
    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        here = self.start
        for i, (edge, forward) in enumerate(self.steps):
            tail, head = (edge.source, edge.target) if forward else (edge.target, edge.source)
            if tail != here:
                raise ValueError(f"malformed path: step {i} starts at {tail}, expected {here}")
            here = head
        object.__setattr__(self, "_end", here)

    @property
    def end(self) -> Interval:
        return self._end  # type: ignore[attr-defined]

    @property
    def is_closed(self) -> bool:
        return self.start == self.end

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __add__(self, other: "Path") -> "Path":
        if self.end != other.start:
            raise ValueError("paths do not chain")
        return Path(self.start, self.steps + other.steps)

    def reversed(self) -> "Path":
        return Path(self.end, tuple((e, not fwd) for e, fwd in reversed(self.steps)))

    def vertices(self) -> list[Interval]:
        out = [self.start]
        for edge, forward in self.steps:
            out.append(edge.target if forward else edge.source)
        return out

    @classmethod
    def of_edges(cls, start: Interval, edges: Iterable[EdgeRef]) -> "Path":
        """Forward path along ``edges``."""
        return cls(start, tuple((e, True) for e in edges))

    @classmethod
    def spelling(cls, start: Interval, word: str) -> "Path":
        steps = []
        here = start
        for c in word:
            edge = EdgeRef(here, c)
            steps.append((edge, True))
            here = edge.target
        return cls(start, tuple(steps))


TreePath = Path


def tree_path(v: Interval) -> Path:
    """``[1, v]``: the forward path spelling the normal form of ``v``."""
    return Path.spelling(IDENTITY, element_word(v))


def geodesic(v: Interval, w: Interval) -> Path:
    """``[v, w]``: down from ``v`` to the branch point, then up to ``w``, all in T."""
    wv, ww = element_word(v), element_word(w)
    p = 0
    while p < min(len(wv), len(ww)) and wv[p] == ww[p]:
        p += 1
    down = tree_path(v).steps[p:]
    up = tree_path(w).steps[p:]
    return Path(v, tuple((e, False) for e, _ in reversed(down)) + up)


# --- balls ---------------------------------------------------------------------

def ball_edges(N: int) -> list[tuple[EdgeRef, EdgeClass]]:
    """Arcs with both endpoints of size at most ``N``, canonically ordered."""
    result = []
    for m in enumerate_ball(N):
        for z in GENERATORS:
            e = EdgeRef(m, z)
            if e.target.size <= N:
                result.append((e, classify_edge(e)))
    return result


def verify_classification(N: int) -> VerificationReport:
    """Cross-check the pattern classification against normal-form and component oracles."""
    if N < 2:
        raise ValueError("classification check needs N >= 2")
    report = VerificationReport("classification", {"N": N})
    counts = {kind.value: 0 for kind in EdgeKind}
    with report.timed():
        for e, cls in ball_edges(N):
            counts[cls.kind.value] += 1
            src, tgt = e.source, e.target
            tree = is_tree_edge_oracle(e)
            same_component = scc_key(src) == scc_key(tgt)
            if tree:
                expected = TREE
            elif same_component:
                expected = STRONG
            else:
                expected = EdgeClass(EdgeKind.TRANSITION, src.size)
            report.expect(
                cls == expected,
                {"edge": e.to_json(), "pattern": cls.to_json(), "oracle": expected.to_json()},
            )
            if cls.kind is EdgeKind.STRONG:
                f = normal_form(src)
                # x^n y^k --x--> x^n y^(k-1), or x^n y^k x^j --y--> x^n y^k x^(j-1)
                if isinstance(f, TypeI):
                    ok = e.gen == "x" and 0 < f.k <= f.n and normal_form(tgt) == TypeI(f.n, f.k - 1)
                else:
                    ok = e.gen == "y" and 0 < f.j <= f.k and element_word(tgt) == element_word(src)[:-1]
                report.expect(ok, {"edge": e.to_json(), "reason": "strong edge outside both patterns"})
            elif cls.kind is EdgeKind.TRANSITION:
                report.expect(
                    tgt.size == src.size + 1 and src.t == src.b and src.a < 0 and e.gen == "x",
                    {"edge": e.to_json(), "reason": "transition edge outside the pattern"},
                )
    report.details["counts"] = counts
    return report
