"""Free inverse monoids of arbitrary rank, represented by Munn trees.

Words are strings: a lowercase letter is a generator and the matching
uppercase letter is its formal inverse, so ``"aA"`` is ``a a^-1``.  A Munn
tree is stored as its embedded vertex set inside the Cayley tree of the free
group (a prefix-closed set of reduced words) together with the out-vertex.
Two words are equal in FIM(X) exactly when their Munn trees coincide.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

DEFAULT_ALPHABET = "ab"

_EXPONENT = re.compile(r"([A-Za-z])\^(-?\d+)")


def _check_alphabet(alphabet: str) -> None:
    if not alphabet or not alphabet.isalpha() or not alphabet.islower():
        raise ValueError(f"alphabet must be non-empty lowercase letters, got {alphabet!r}")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"repeated generator in alphabet {alphabet!r}")


def inverse_letter(c: str) -> str:
    return c.swapcase()


def formal_inverse(w: str) -> str:
    """Reverse ``w`` and invert each letter (no free reduction)."""
    return "".join(inverse_letter(c) for c in reversed(w))


def validate_word(w: str, alphabet: str) -> str:
    _check_alphabet(alphabet)
    for c in w:
        if c.lower() not in alphabet:
            raise ValueError(f"unknown generator symbol {c!r} (alphabet {alphabet!r})")
    return w


def parse_word(text: str, alphabet: str = DEFAULT_ALPHABET) -> str:
    """Parse a word, expanding ``a^5`` shorthand and dropping whitespace.

    A negative exponent inverts the letter: ``a^-2`` is ``AA``.
    """

    def expand(m: re.Match) -> str:
        letter, power = m.group(1), int(m.group(2))
        if power < 0:
            letter, power = inverse_letter(letter), -power
        return letter * power

    compact = "".join(text.split())
    expanded = _EXPONENT.sub(expand, compact)
    if "^" in expanded:
        raise ValueError(f"malformed exponent in {text!r}")
    return validate_word(expanded, alphabet)


def reduce(w: str, alphabet: str | None = None) -> str:
    """Freely reduce ``w``."""
    if alphabet is not None:
        validate_word(w, alphabet)
    stack: list[str] = []
    for c in w:
        if stack and stack[-1] == inverse_letter(c):
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack)


def word_key(w: str) -> tuple[int, str]:
    """Canonical total order on reduced words: length, then lexicographic."""
    return (len(w), w)


@dataclass(frozen=True)
class MunnTree:
    vertices: frozenset[str]
    out: str
    alphabet: str = DEFAULT_ALPHABET

    def __post_init__(self) -> None:
        _check_alphabet(self.alphabet)
        if "" not in self.vertices:
            raise ValueError("Munn tree must contain the empty word")
        if self.out not in self.vertices:
            raise ValueError(f"out-vertex {self.out!r} is not a vertex")
        for v in self.vertices:
            validate_word(v, self.alphabet)
            if reduce(v) != v:
                raise ValueError(f"vertex {v!r} is not freely reduced")
            if v and v[:-1] not in self.vertices:
                raise ValueError(f"vertex set is not prefix-closed at {v!r}")

    @classmethod
    def _trusted(cls, vertices: Iterable[str], out: str, alphabet: str) -> "MunnTree":
        # skips validation; callers guarantee the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "vertices", frozenset(vertices))
        object.__setattr__(obj, "out", out)
        object.__setattr__(obj, "alphabet", alphabet)
        return obj

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices, key=word_key)

    def edges(self) -> list[tuple[str, str, str]]:
        """Tree edges as ``(u, letter, v)`` with ``v = reduce(u + letter)``, oriented by the generator."""
        result = []
        for v in self.sorted_vertices():
            if not v:
                continue
            parent, c = v[:-1], v[-1]
            if c.islower():
                result.append((parent, c, v))
            else:
                result.append((v, c.lower(), parent))
        return result

    def to_json(self) -> dict:
        return {"vertices": self.sorted_vertices(), "out": self.out}

    @classmethod
    def from_json(cls, data: dict, alphabet: str = DEFAULT_ALPHABET) -> "MunnTree":
        return cls(frozenset(data["vertices"]), data["out"], alphabet)

    def __mul__(self, other: "MunnTree") -> "MunnTree":
        return mt_multiply(self, other)


def munn_tree(w: str, alphabet: str = DEFAULT_ALPHABET) -> MunnTree:
    """Trace ``w`` through the Cayley tree of the free group from the identity."""
    validate_word(w, alphabet)
    stack: list[str] = []
    seen = {""}
    for c in w:
        if stack and stack[-1] == inverse_letter(c):
            stack.pop()
        else:
            stack.append(c)
            seen.add("".join(stack))
    return MunnTree._trusted(seen, "".join(stack), alphabet)


def _translate(g: str, words: Iterable[str]) -> set[str]:
    return {reduce(g + w) for w in words}


def mt_multiply(u: MunnTree, v: MunnTree, *rest: MunnTree) -> MunnTree:
    """Product of Munn trees: ``MT(u) ∪ out(u)·MT(v)`` with out-vertex ``out(u)·out(v)``."""
    for t in (v, *rest):
        if t.alphabet != u.alphabet:
            raise ValueError(f"alphabet mismatch: {u.alphabet!r} vs {t.alphabet!r}")
    result = u
    for t in (v, *rest):
        vertices = result.vertices | _translate(result.out, t.vertices)
        result = MunnTree._trusted(vertices, reduce(result.out + t.out), u.alphabet)
    return result


def mt_inverse(u: MunnTree) -> MunnTree:
    """Translate by ``out(u)^-1`` so the two roots swap."""
    back = formal_inverse(u.out)
    return MunnTree._trusted(_translate(back, u.vertices), back, u.alphabet)


def fim_equal(u: str, v: str, alphabet: str = DEFAULT_ALPHABET) -> bool:
    return munn_tree(u, alphabet) == munn_tree(v, alphabet)


def is_idempotent(u: MunnTree) -> bool:
    return u.out == ""


def r_related(u: MunnTree, v: MunnTree) -> bool:
    """Green's R relation: same tree, out-vertices ignored."""
    if u.alphabet != v.alphabet:
        raise ValueError(f"alphabet mismatch: {u.alphabet!r} vs {v.alphabet!r}")
    return u.vertices == v.vertices


def retract_to_monogenic(w: str, g: str, alphabet: str = DEFAULT_ALPHABET) -> str:
    """Delete every letter other than ``g`` and its inverse."""
    validate_word(w, alphabet)
    if len(g) != 1 or g not in alphabet:
        raise ValueError(f"generator {g!r} not in alphabet {alphabet!r}")
    keep = {g, inverse_letter(g)}
    return "".join(c for c in w if c in keep)


def monogenic_to_general(w: str, gen: str = "a") -> str:
    """Rename a word over ``{x, y}`` (``y = x^-1``) into ``{gen, GEN}``."""
    table = {"x": gen, "y": inverse_letter(gen)}
    try:
        return "".join(table[c] for c in w)
    except KeyError as exc:
        raise ValueError(f"bad letter {exc.args[0]!r} in monogenic word {w!r}") from None
