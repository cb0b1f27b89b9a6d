"""Chains on the Cayley digraph, the basis of H_1 dual to T, and the left M-action.

The augmented complex is ``C_1 --d--> C_0 --eps--> Z``.  For a non-tree arc
``e`` the basis cycle is ``[1, source(e)] e [1, target(e)]^-1``; since a graph
has no 2-cells, a cycle is determined by its coefficients on non-tree arcs, so
homology classes live as sparse integer vectors indexed by non-tree arcs.

``W_k`` is never stored: ``v`` lies in ``W_k`` iff ``max_weight(v) <= k``.
"""
from __future__ import annotations

import random
from collections.abc import Mapping
from functools import lru_cache
from typing import Any, Hashable, Iterable, Iterator, Union

from .cayley import (
    EdgeKind,
    EdgeRef,
    Path,
    ball_edges,
    classify_edge,
    geodesic,
    is_tree_edge_oracle,
    scc_key,
    tree_path,
)
from .monogenic import (
    GENERATORS,
    IDENTITY,
    Interval,
    TypeII,
    element_word,
    enumerate_ball,
    eval_word,
    left_mult,
    mult,
    nf_interval,
)
from .report import VerificationReport


class Chain(Mapping):
    """Finitely supported integer combination; zero coefficients are dropped."""

    __slots__ = ("_coeffs",)

    def __init__(self, items: Mapping | Iterable[tuple[Hashable, int]] = ()) -> None:
        coeffs: dict = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        for key, c in pairs:
            coeffs[key] = coeffs.get(key, 0) + c
        self._coeffs = {k: c for k, c in coeffs.items() if c}
        self._validate()

    def _validate(self) -> None:
        pass

    def __getitem__(self, key: Hashable) -> int:
        return self._coeffs[key]

    def get(self, key: Hashable, default: int = 0) -> int:
        return self._coeffs.get(key, default)

    def __iter__(self) -> Iterator:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __add__(self, other: "Chain") -> "Chain":
        return type(self)(list(self.items()) + list(other.items()))

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return type(self)((k, -c) for k, c in self.items())

    def __mul__(self, scalar: int) -> "Chain":
        return type(self)((k, scalar * c) for k, c in self.items())

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._coeffs!r})"


class OneChain(Chain):
    __slots__ = ()


class ZeroChain(Chain):
    __slots__ = ()


class HomologyVector(Chain):
    """Coordinates of a class of H_1 in the basis ``{b_e : e not in T}``."""

    __slots__ = ()

    def _validate(self) -> None:
        for e in self._coeffs:
            if classify_edge(e).kind is EdgeKind.TREE:
                raise ValueError(f"tree edge {e} is not a basis element of H_1")

    def sorted_items(self) -> list[tuple[EdgeRef, int]]:
        return sorted(self.items(), key=lambda item: (weight(item[0]), item[0].sort_key))

    def to_json(self) -> list[dict]:
        return [
            {"edge": e.to_json(), "coeff": c, "weight": weight(e)}
            for e, c in self.sorted_items()
        ]


def unit(e: EdgeRef) -> HomologyVector:
    """The basis vector ``b_e``."""
    return HomologyVector({e: 1})


# --- the chain complex -----------------------------------------------------------

def chain_of_path(p: Path) -> OneChain:
    """Forward traversals minus backward traversals, arc by arc."""
    return OneChain((e, 1 if forward else -1) for e, forward in p)


def edge_chain(e: EdgeRef) -> OneChain:
    return OneChain({e: 1})


def boundary(c: OneChain) -> ZeroChain:
    pairs = []
    for e, coeff in c.items():
        pairs.append((e.target, coeff))
        pairs.append((e.source, -coeff))
    return ZeroChain(pairs)


def augment(c: ZeroChain) -> int:
    return sum(c.values())


@lru_cache(maxsize=8)
def _leaves_first(N: int) -> list[tuple[Interval, EdgeRef | None]]:
    # deepest vertices first: the arc into a leaf is forced by the leaf's boundary
    order = []
    for v in sorted(enumerate_ball(N), key=lambda m: -len(element_word(m))):
        word = element_word(v)
        order.append((v, EdgeRef(eval_word(word[:-1]), word[-1]) if word else None))
    return order


def tree_chain_from_boundary(z: ZeroChain, N: int) -> OneChain:
    """Recover the unique T-supported chain in ball ``N`` with boundary ``z`` by leaf stripping.

    Raises ``ValueError`` if no such chain exists.
    """
    residual = dict(z)
    coeffs: dict[EdgeRef, int] = {}
    for v, e in _leaves_first(N):
        r = residual.pop(v, 0)
        if e is None:
            if r:
                raise ValueError("boundary does not come from a tree chain")
            continue
        parent = e.source
        if r:
            coeffs[e] = r
            residual[parent] = residual.get(parent, 0) + r
    if any(residual.values()):
        raise ValueError("boundary has support outside the ball")
    return OneChain(coeffs)


# --- basis cycles and the action ---------------------------------------------------

def weight(e: EdgeRef) -> int:
    cls = classify_edge(e)
    if cls.kind is EdgeKind.TREE:
        raise ValueError(f"tree edge {e} has no weight")
    if cls.kind is EdgeKind.STRONG:
        return 0
    return e.source.size


def max_weight(v: HomologyVector) -> int | None:
    if not v:
        return None
    return max(weight(e) for e in v)


@lru_cache(maxsize=None)
def basis_cycle(e: EdgeRef) -> Path:
    """``[1, source(e)] e [1, target(e)]^-1``, a closed path at the identity."""
    if classify_edge(e).kind is EdgeKind.TREE:
        raise ValueError(f"{e} is a tree edge, not a basis edge")
    return tree_path(e.source) + Path.of_edges(e.source, [e]) + tree_path(e.target).reversed()


def restrict_to_basis(c: OneChain) -> HomologyVector:
    return HomologyVector((e, coeff) for e, coeff in c.items() if classify_edge(e).kind is not EdgeKind.TREE)


def homology_of_path(p: Path) -> HomologyVector:
    if not p.is_closed:
        raise ValueError("homology class requires a closed path")
    return restrict_to_basis(chain_of_path(p))


def expand(v: HomologyVector) -> OneChain:
    """The cycle ``sum coeff * b_e`` as an honest 1-chain."""
    total = OneChain()
    for e, c in v.items():
        total = total + c * chain_of_path(basis_cycle(e))
    return total


Actor = Union[str, Interval]


def _actor(z: Actor) -> Interval:
    if isinstance(z, Interval):
        return z
    if z not in GENERATORS:
        raise ValueError(f"generator must be 'x' or 'y', got {z!r}")
    return eval_word(z)


def translate_path(z: Actor, p: Path) -> Path:
    """Left translate a path by a generator or by any element of M."""
    m = _actor(z)
    return Path(mult(m, p.start), tuple((EdgeRef(mult(m, e.source), e.gen), fwd) for e, fwd in p))


def translate_chain(z: Actor, c: OneChain) -> OneChain:
    m = _actor(z)
    return OneChain((EdgeRef(mult(m, e.source), e.gen), coeff) for e, coeff in c.items())


@lru_cache(maxsize=None)
def _act_basis(m: Interval, e: EdgeRef) -> HomologyVector:
    return homology_of_path(translate_path(m, basis_cycle(e)))


def act_element(m: Interval, v: HomologyVector) -> HomologyVector:
    total = HomologyVector()
    for e, c in v.items():
        total = total + c * _act_basis(m, e)
    return total


def act(z: str, v: HomologyVector) -> HomologyVector:
    """``z . v`` for a generator ``z``: translate each basis cycle and re-decompose."""
    return act_element(_actor(z), v)


def act_word(w: str, v: HomologyVector) -> HomologyVector:
    """Act letter by letter, rightmost letter first, so ``(uw).v = u.(w.v)``."""
    for z in reversed(w):
        v = act(z, v)
    return v


def transition_edge(n: int, k: int) -> EdgeRef:
    """``x^n y^k x^k --x--> x^(n+1) y^(k+1) x^(k+1)``, of weight ``k``."""
    return EdgeRef(nf_interval(TypeII(n, k, k)), "x")


def two_cycle(e: EdgeRef) -> Path:
    """For a strong arc, the directed 2-cycle through it: the tree arc back, then ``e``."""
    back = EdgeRef(e.target, "y" if e.gen == "x" else "x")
    return Path.of_edges(e.target, [back, e])


# --- verifiers ---------------------------------------------------------------------

def _ej(e: EdgeRef) -> dict[str, Any]:
    return e.to_json()


def verify_basis(N: int) -> VerificationReport:
    """Every basis cycle decomposes to its own unit vector."""
    report = VerificationReport("basis", {"N": N})
    with report.timed():
        for e, cls in ball_edges(N):
            if cls.kind is EdgeKind.TREE:
                continue
            cyc = basis_cycle(e)
            report.expect(cyc.is_closed and cyc.start == IDENTITY, {"edge": _ej(e), "reason": "not closed at 1"})
            report.expect(homology_of_path(cyc) == unit(e), {"edge": _ej(e)})
    return report


def verify_strong_cycles(K: int) -> VerificationReport:
    """The directed 2-cycle through each strong arc represents ``b_e`` (n, k <= K)."""
    report = VerificationReport("strong_cycles", {"K": K})
    with report.timed():
        edges = [EdgeRef(Interval(0, n, n - k), "x") for n in range(1, K + 1) for k in range(1, n + 1)]
        edges += [
            EdgeRef(nf_interval(TypeII(n, k, j)), "y")
            for k in range(1, K + 1)
            for n in range(k)
            for j in range(1, k + 1)
        ]
        for e in edges:
            report.expect(classify_edge(e).kind is EdgeKind.STRONG, {"edge": _ej(e), "reason": "not strong"})
            cyc = two_cycle(e)
            report.expect(
                cyc.is_closed and classify_edge(cyc.steps[0][0]).kind is EdgeKind.TREE,
                {"edge": _ej(e), "reason": "2-cycle malformed"},
            )
            report.expect(homology_of_path(cyc) == unit(e), {"edge": _ej(e), "reason": "2-cycle != b_e"})
            report.expect(
                chain_of_path(cyc) == chain_of_path(basis_cycle(e)),
                {"edge": _ej(e), "reason": "2-cycle chain != basis cycle chain"},
            )
    return report


def verify_w0(N: int) -> VerificationReport:
    """``W_0`` is closed under ``x`` and ``y``, checked on every strong arc of ball ``N``."""
    if N < 2:
        raise ValueError("W_0 check needs N >= 2")
    report = VerificationReport("w0", {"N": N})
    with report.timed():
        for e, cls in ball_edges(N):
            if cls.kind is not EdgeKind.STRONG:
                continue
            cyc = two_cycle(e)
            report.expect(homology_of_path(cyc) == unit(e), {"edge": _ej(e), "reason": "2-cycle != b_e"})
            for z in GENERATORS:
                moved = translate_path(z, cyc)
                report.expect(
                    moved.is_closed
                    and len(moved) == 2
                    and all(fwd for _, fwd in moved)
                    and len({scc_key(v) for v in moved.vertices()}) == 1,
                    {"edge": _ej(e), "z": z, "reason": "translate is not a directed 2-cycle in one component"},
                )
                v = act(z, unit(e))
                report.expect(max_weight(v) in (None, 0), {"edge": _ej(e), "z": z, "image": v.to_json()})
    return report


def verify_filtration(K: int) -> VerificationReport:
    """``x . b_e`` and ``y . b_e`` stay in ``W_k`` for each transition arc of weight ``k <= K``.

    Also checks the individual landmarks of the case analysis and that each
    decomposition is exact at chain level.
    """
    if K < 1:
        raise ValueError("filtration check needs K >= 1")
    report = VerificationReport("filtration", {"K": K})
    edges = 0
    with report.timed():
        for k in range(1, K + 1):
            for n in range(k):
                e = transition_edge(n, k)
                edges += 1
                tag = {"n": n, "k": k}
                cycle_chain = chain_of_path(basis_cycle(e))
                for z in GENERATORS:
                    v = act(z, unit(e))
                    mw = max_weight(v)
                    report.expect(mw is None or mw <= k, {**tag, "z": z, "max_weight": mw, "image": v.to_json()})
                    report.expect(
                        expand(v) == translate_chain(z, cycle_chain),
                        {**tag, "z": z, "reason": "decomposition not exact"},
                    )
                    moved = EdgeRef(left_mult(z, e.source), e.gen)
                    if z == "y" and n >= 1:
                        lower = transition_edge(n - 1, n)
                        report.expect(
                            v.get(lower) != 0 and weight(lower) == n,
                            {**tag, "z": z, "reason": "weight-n arc missing from y.b_e"},
                        )
                        report.expect(
                            moved == transition_edge(n - 1, k) and v.get(moved) == 1,
                            {**tag, "z": z, "reason": "y.e is not the weight-k arc at n-1"},
                        )
                    elif z == "y":
                        report.expect(
                            classify_edge(moved).kind is EdgeKind.TREE and moved not in v,
                            {**tag, "z": z, "reason": "y.e should be a tree edge when n = 0"},
                        )
                    elif k > n + 1:
                        report.expect(
                            v == unit(transition_edge(n + 1, k)),
                            {**tag, "z": z, "image": v.to_json(), "reason": "x.b_e != b at (n+1, k)"},
                        )
                    else:
                        report.expect(
                            classify_edge(moved).kind is EdgeKind.TREE and mw in (None, 0),
                            {**tag, "z": z, "image": v.to_json(), "reason": "k = n+1 case leaves W_0"},
                        )
    report.details["transition_edges"] = edges
    return report


def verify_strictness(K: int) -> VerificationReport:
    """Each level ``k <= K`` has a weight-``k`` basis vector and exactly ``k`` such arcs."""
    if K < 1:
        raise ValueError("strictness check needs K >= 1")
    report = VerificationReport("strictness", {"K": K})
    per_weight: dict[int, int] = {}
    with report.timed():
        for _, cls in ball_edges(K + 1):
            if cls.kind is EdgeKind.TRANSITION:
                per_weight[cls.weight] = per_weight.get(cls.weight, 0) + 1
        witnesses = []
        for k in range(1, K + 1):
            report.expect(per_weight.get(k, 0) == k, {"k": k, "count": per_weight.get(k, 0)})
            e = transition_edge(0, k)
            mw = max_weight(unit(e))
            ok = classify_edge(e).kind is EdgeKind.TRANSITION and mw == k and mw > k - 1
            if report.expect(ok, {"k": k, "edge": _ej(e), "max_weight": mw}):
                witnesses.append(e.label())
    report.details["witnesses"] = witnesses
    return report


def verify_transition_basis(K: int) -> VerificationReport:
    """``b_e = [x^n, source] + e - [x^n, target]`` for every transition arc with ``k <= K``."""
    if K < 1:
        raise ValueError("transition basis check needs K >= 1")
    report = VerificationReport("transition_basis", {"K": K})
    with report.timed():
        for k in range(1, K + 1):
            for n in range(k):
                e = transition_edge(n, k)
                tag = {"n": n, "k": k}
                src, tgt = e.source, e.target
                xn = Interval(0, n, n)
                prefix = element_word(xn)
                report.expect(
                    element_word(src).startswith(prefix) and element_word(tgt).startswith(prefix),
                    {**tag, "reason": "x^n is not a common initial segment"},
                )
                g1, g2 = geodesic(xn, src), geodesic(xn, tgt)
                report.expect(
                    all(is_tree_edge_oracle(a) for a, _ in (*g1, *g2)),
                    {**tag, "reason": "geodesic leaves T"},
                )
                formula = chain_of_path(g1) + edge_chain(e) - chain_of_path(g2)
                direct = chain_of_path(basis_cycle(e))
                diff = direct - formula
                report.expect(
                    all(classify_edge(a).kind is EdgeKind.TREE for a in diff) and not boundary(diff),
                    {**tag, "reason": "difference is not a tree-only cycle"},
                )
                report.expect(not diff, {**tag, "reason": "chains differ"})
                report.expect(restrict_to_basis(formula) == unit(e), {**tag, "reason": "formula != b_e"})
                report.expect(homology_of_path(basis_cycle(e)) == unit(e), {**tag, "reason": "cycle != b_e"})
    return report


def rank_check(N: int) -> VerificationReport:
    """``|E| - |V| + 1`` equals the number of non-tree arcs in ball ``N``."""
    report = VerificationReport("rank", {"N": N})
    with report.timed():
        vertices = enumerate_ball(N)
        edges = ball_edges(N) if N >= 1 else []
        non_tree = sum(1 for _, cls in edges if cls.kind is not EdgeKind.TREE)
        ball = set(vertices)
        for v in vertices:
            report.expect(
                all(e.source in ball for e, _ in tree_path(v)),
                {"vertex": v.to_json(), "reason": "tree path leaves the ball"},
            )
        report.expect(
            len(edges) - len(vertices) + 1 == non_tree,
            {"E": len(edges), "V": len(vertices), "non_tree": non_tree},
        )
        report.details.update({"E": len(edges), "V": len(vertices), "non_tree": non_tree})
    return report


def verify_chain_complex(N: int, samples: int = 1000, seed: int = 20260101) -> VerificationReport:
    """``eps . d = 0``, closed paths are cycles, open tree paths are not, ``d`` is injective on T-chains."""
    report = VerificationReport("chain_complex", {"N": N, "samples": samples, "seed": seed})
    rng = random.Random(seed)
    with report.timed():
        edges = [e for e, _ in ball_edges(N)]
        for e in edges:
            report.expect(augment(boundary(edge_chain(e))) == 0, {"edge": _ej(e)})
        tree_edges = [e for e in edges if classify_edge(e).kind is EdgeKind.TREE]
        for i in range(samples):
            support = rng.sample(edges, rng.randint(1, min(12, len(edges))))
            c = OneChain((e, rng.randint(-5, 5)) for e in support)
            report.expect(augment(boundary(c)) == 0, {"sample": i})
            t = OneChain((e, rng.randint(-5, 5)) for e in rng.sample(tree_edges, rng.randint(1, 6)))
            report.expect(tree_chain_from_boundary(boundary(t), N) == t, {"sample": i, "reason": "leaf stripping"})
        for e in edges:
            if classify_edge(e).kind is EdgeKind.TREE:
                continue
            for p in (basis_cycle(e), translate_path("x", basis_cycle(e)), translate_path("y", basis_cycle(e))):
                report.expect(not boundary(chain_of_path(p)), {"edge": _ej(e), "reason": "closed path has boundary"})
        for v in enumerate_ball(N):
            if v != IDENTITY:
                report.expect(boundary(chain_of_path(tree_path(v))) != ZeroChain(), {"vertex": v.to_json()})
    return report
