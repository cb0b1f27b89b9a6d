"""The free monogenic inverse monoid M on ``x`` with ``y = x^-1``.

A Munn tree of M is a segment of the integer line containing 0, so an element
is the triple ``(a, b, t)``: leftmost vertex, rightmost vertex, out-vertex.
Normal forms sweep right, then left, then right again:

* Type I, no edge left of 0: ``x^n y^k`` with ``0 <= k <= n``;
* Type II, some edge left of 0: ``x^n y^k x^j`` with ``0 <= n < k``, ``0 <= j <= k``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .fim import fim_equal, monogenic_to_general
from .report import VerificationReport

GENERATORS = ("x", "y")
_STEP = {"x": 1, "y": -1}
_EXPONENT = re.compile(r"([xy])\^(-?\d+)")


@dataclass(frozen=True, slots=True)
class Interval:
    a: int
    b: int
    t: int

    def __post_init__(self) -> None:
        if not (self.a <= 0 <= self.b and self.a <= self.t <= self.b):
            raise ValueError(f"invalid interval a={self.a} b={self.b} t={self.t}")

    @property
    def size(self) -> int:
        """Number of edges of the Munn tree."""
        return self.b - self.a

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.b - self.a, self.a, self.t)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "t": self.t}

    @classmethod
    def from_json(cls, data: dict) -> "Interval":
        return cls(int(data["a"]), int(data["b"]), int(data["t"]))

    def __mul__(self, other: "Interval") -> "Interval":
        return mult(self, other)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.t})"


IDENTITY = Interval(0, 0, 0)


@dataclass(frozen=True, slots=True)
class TypeI:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise ValueError(f"Type I normal form needs 0 <= k <= n, got n={self.n} k={self.k}")

    def to_json(self) -> dict:
        return {"type": "I", "n": self.n, "k": self.k}


@dataclass(frozen=True, slots=True)
class TypeII:
    n: int
    k: int
    j: int

    def __post_init__(self) -> None:
        if not (0 <= self.n < self.k and 0 <= self.j <= self.k):
            raise ValueError(
                f"Type II normal form needs 0 <= n < k and 0 <= j <= k, got n={self.n} k={self.k} j={self.j}"
            )

    def to_json(self) -> dict:
        return {"type": "II", "n": self.n, "k": self.k, "j": self.j}


NormalForm = Union[TypeI, TypeII]


def nf_from_json(data: dict) -> NormalForm:
    if data["type"] == "I":
        return TypeI(int(data["n"]), int(data["k"]))
    if data["type"] == "II":
        return TypeII(int(data["n"]), int(data["k"]), int(data["j"]))
    raise ValueError(f"unknown normal form type {data['type']!r}")


# --- words -----------------------------------------------------------------

def check_word(w: str) -> str:
    for c in w:
        if c not in _STEP:
            raise ValueError(f"bad letter {c!r}: monogenic words use only 'x' and 'y'")
    return w


def parse_word(text: str) -> str:
    """Parse ``x^4y^6x^3``-style input; whitespace is ignored and ``1`` is the identity."""
    compact = "".join(text.split())
    if compact == "1":
        return ""

    def expand(m: re.Match) -> str:
        letter, power = m.group(1), int(m.group(2))
        if power < 0:
            letter, power = ("y" if letter == "x" else "x"), -power
        return letter * power

    expanded = _EXPONENT.sub(expand, compact)
    if "^" in expanded:
        raise ValueError(f"malformed exponent in {text!r}")
    return check_word(expanded)


def format_word(w: str) -> str:
    """Exponent syntax, e.g. ``x^5 y^3``; the empty word prints as ``1``."""
    if not w:
        return "1"
    return " ".join(f"{c}^{len(list(run))}" for c, run in itertools.groupby(w))


def all_words(max_len: int) -> Iterator[str]:
    for n in range(max_len + 1):
        for letters in itertools.product(GENERATORS, repeat=n):
            yield "".join(letters)


# --- arithmetic ------------------------------------------------------------

def eval_word(w: str) -> Interval:
    check_word(w)
    pos = lo = hi = 0
    for c in w:
        pos += _STEP[c]
        if pos < lo:
            lo = pos
        elif pos > hi:
            hi = pos
    return Interval(lo, hi, pos)


def mult(m1: Interval, m2: Interval) -> Interval:
    return Interval(min(m1.a, m1.t + m2.a), max(m1.b, m1.t + m2.b), m1.t + m2.t)


GEN_INTERVAL = {"x": Interval(0, 1, 1), "y": Interval(-1, 0, -1)}


def _gen(z: str) -> Interval:
    try:
        return GEN_INTERVAL[z]
    except KeyError:
        raise ValueError(f"generator must be 'x' or 'y', got {z!r}") from None


def left_mult(z: str, m: Interval) -> Interval:
    return mult(_gen(z), m)


def right_mult(m: Interval, z: str) -> Interval:
    return mult(m, _gen(z))


def normal_form(m: Interval) -> NormalForm:
    if m.a == 0:
        return TypeI(m.b, m.b - m.t)
    return TypeII(m.b, m.b - m.a, m.t - m.a)


def nf_word(f: NormalForm) -> str:
    if isinstance(f, TypeI):
        return "x" * f.n + "y" * f.k
    return "x" * f.n + "y" * f.k + "x" * f.j


def nf_interval(f: NormalForm) -> Interval:
    if isinstance(f, TypeI):
        return Interval(0, f.n, f.n - f.k)
    return Interval(f.n - f.k, f.n, f.n - f.k + f.j)


def element_word(m: Interval) -> str:
    return nf_word(normal_form(m))


def element_label(m: Interval) -> str:
    """Exponent-syntax normal form used for display and in JSON."""
    return format_word(element_word(m))


def parse_element(text: str) -> Interval:
    return eval_word(parse_word(text))


def nf_parent(f: NormalForm) -> NormalForm:
    """Normal form of the normal-form word with its last letter removed."""
    if isinstance(f, TypeI):
        if f.k > 0:
            return TypeI(f.n, f.k - 1)
        if f.n > 0:
            return TypeI(f.n - 1, 0)
        raise ValueError("the identity has no parent")
    if f.j > 0:
        return TypeII(f.n, f.k, f.j - 1)
    if f.k - 1 > f.n:
        return TypeII(f.n, f.k - 1, 0)
    return TypeI(f.n, f.n)


def enumerate_ball(N: int) -> list[Interval]:
    """Every element whose Munn tree has at most ``N`` edges, in canonical order."""
    if N < 0:
        raise ValueError("ball radius must be non-negative")
    return [
        Interval(a, s + a, t)
        for s in range(N + 1)
        for a in range(-s, 1)
        for t in range(a, s + a + 1)
    ]


def ball_count(N: int) -> int:
    return sum((s + 1) ** 2 for s in range(N + 1))


def enumerate_normal_forms(N: int) -> list[NormalForm]:
    """All normal forms with at most ``N`` tree edges, straight from the parameter constraints."""
    forms: list[NormalForm] = [TypeI(n, k) for n in range(N + 1) for k in range(n + 1)]
    forms += [TypeII(n, k, j) for k in range(1, N + 1) for n in range(k) for j in range(k + 1)]
    return forms


# --- verifiers ---------------------------------------------------------------

def _xyx(n: int, k: int, j: int = 0) -> str:
    return "x" * n + "y" * k + "x" * j


def verify_identities(n_max: int) -> VerificationReport:
    """Check the three families of identities for every admissible ``n, k <= n_max``.

    1. ``x^n y^k x^(k+1) = x^(n+1) y^(k+1) x^(k+1)`` for ``k > n``;
    2. ``y x^n y^k = x^(n-1) y^n x^(n-k)`` for ``n >= 1``, ``0 <= k <= n``;
    3. ``y x^n y^k = x^(n-1) y^k`` for ``0 < n < k``.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    report = VerificationReport("identities", {"n_max": n_max})
    counts = {"1": 0, "2": 0, "3": 0}
    with report.timed():
        for n in range(n_max + 1):
            for k in range(n_max + 1):
                cases = []
                if k > n:
                    cases.append(("1", _xyx(n, k, k + 1), _xyx(n + 1, k + 1, k + 1)))
                if n >= 1 and k <= n:
                    cases.append(("2", "y" + _xyx(n, k), _xyx(n - 1, n, n - k)))
                if 0 < n < k:
                    cases.append(("3", "y" + _xyx(n, k), _xyx(n - 1, k)))
                for item, lhs, rhs in cases:
                    counts[item] += 1
                    left, right = eval_word(lhs), eval_word(rhs)
                    report.expect(
                        left == right,
                        {"item": int(item), "n": n, "k": k, "lhs": left.to_json(), "rhs": right.to_json()},
                    )
    report.details["per_item"] = counts
    return report


def verify_normal_forms(N: int, L: int) -> VerificationReport:
    """Bijection with the ball, prefix closure, and agreement with Munn-tree equality."""
    if L < N:
        raise ValueError("word length bound L must be at least N")
    report = VerificationReport("normal_forms", {"N": N, "L": L})
    with report.timed():
        ball = enumerate_ball(N)
        report.expect(len(ball) == ball_count(N), {"ball_size": len(ball)})

        # (i) normal_form is a bijection from the ball onto the admissible parameter set
        images = [normal_form(m) for m in ball]
        expected = enumerate_normal_forms(N)
        report.expect(len(set(images)) == len(images), {"reason": "normal_form not injective"})
        report.expect(set(images) == set(expected), {"reason": "image differs from admissible normal forms"})
        for m, f in zip(ball, images):
            report.expect(nf_interval(f) == m, {"element": m.to_json(), "nf": f.to_json()})
            report.expect(eval_word(nf_word(f)) == m, {"element": m.to_json(), "word": nf_word(f)})

        # (ii) prefix closure
        words = {nf_word(f) for f in images}
        for w in sorted(words, key=lambda s: (len(s), s)):
            for i in range(len(w)):
                p = w[:i]
                report.expect(element_word(eval_word(p)) == p, {"word": w, "prefix": p})

        # (iii) every short word equals its normal form in FIM({a})
        for w in all_words(L):
            nf = element_word(eval_word(w))
            report.expect(
                fim_equal(monogenic_to_general(w), monogenic_to_general(nf), "a"),
                {"word": w, "normal_form": nf},
            )
    return report
