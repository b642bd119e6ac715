"""Exact combinatorics of the symmetric group S_n (Weyl group of type A).

Permutations are tuples in one-line notation with 1-based entries, so
``w = (w(1), ..., w(n))`` and ``w[i - 1]`` is the image of ``i``.  The group
law is fixed once and for all as composition of functions,

    compose(u, v)(k) = u(v(k)),

and every formula in the package uses this convention.  A word such as
"s1 s2" therefore denotes ``compose(s1, s2)``, the map applying s2 first.

Covered here: the length function (inversion count), lexicographically
minimal reduced words, supports, strong Bruhat order, minimal-length coset
representatives of W/W_I with their Poincare polynomials, and the two
automorphisms of S_n relevant for GL_n, namely the identity and conjugation
by the longest element.

Text forms: permutations parse from one-line form ("2,3,1") or word form
("s1 s2", "id"); the canonical rendering is the lex-min word, with the
identity rendered as "id".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .polyring import LaurentPoly

__all__ = [
    "Perm",
    "Twist",
    "CosetData",
    "identity",
    "simple_reflection",
    "longest_element",
    "is_valid",
    "compose",
    "inverse",
    "length",
    "mul_simple_right",
    "mul_simple_left",
    "left_descents",
    "right_descents",
    "reduced_word",
    "word_to_perm",
    "support",
    "bruhat_leq",
    "apply_twist",
    "twisted_support_closure",
    "coset_data",
    "all_elements",
    "sort_key",
    "parse_perm",
    "render_perm",
]

Perm = tuple[int, ...]


class Twist(Enum):
    """Automorphism of S_n induced by a rational structure of GL_n.

    TRIVIAL is the identity map; CONJ_BY_W0 is v -> w0*v*w0, which sends
    the generator s_i to s_{n-i}.
    """

    TRIVIAL = "trivial"
    CONJ_BY_W0 = "w0"


def identity(n: int) -> Perm:
    """The identity of S_n.

    >>> identity(3)
    (1, 2, 3)
    """
    return tuple(range(1, n + 1))


def simple_reflection(i: int, n: int) -> Perm:
    """The adjacent transposition s_i swapping i and i+1, for 1 <= i < n.

    >>> simple_reflection(2, 4)
    (1, 3, 2, 4)
    """
    if not 1 <= i < n:
        raise ValueError(f"simple reflection index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def longest_element(n: int) -> Perm:
    """The order-reversing permutation w0, the unique longest element.

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def is_valid(w: Sequence[int]) -> bool:
    """Check that ``w`` is a bijection of {1, ..., len(w)}.

    >>> is_valid((2, 3, 1)), is_valid((1, 1, 2))
    (True, False)
    """
    n = len(w)
    return len(set(w)) == n and all(1 <= v <= n for v in w)


def _check_same_rank(u: Perm, v: Perm) -> None:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: S_{len(u)} vs S_{len(v)}")


def compose(u: Perm, v: Perm) -> Perm:
    """Group product, with v applied first: compose(u, v)(k) = u(v(k)).

    >>> s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
    >>> compose(s1, s2)
    (2, 3, 1)
    """
    _check_same_rank(u, v)
    return tuple(u[k - 1] for k in v)


def inverse(w: Perm) -> Perm:
    """Group inverse.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Coxeter length of w, equal to its number of inversions.

    >>> length((3, 2, 1)), length((1, 2, 3)), length((2, 3, 1))
    (3, 0, 2)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def mul_simple_right(w: Perm, i: int) -> Perm:
    """w * s_i, which swaps the entries in positions i and i+1."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def mul_simple_left(w: Perm, i: int) -> Perm:
    """s_i * w, which swaps the values i and i+1 wherever they occur."""
    a, b = w.index(i), w.index(i + 1)
    out = list(w)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def right_descents(w: Perm) -> list[int]:
    """Indices i with length(w * s_i) < length(w), i.e. w(i) > w(i+1)."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def left_descents(w: Perm) -> list[int]:
    """Indices i with length(s_i * w) < length(w)."""
    wi = inverse(w)
    return [i for i in range(1, len(w)) if wi[i - 1] > wi[i]]


def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for w.

    Built greedily: the possible first letters of reduced words are exactly
    the left descents, and picking the smallest at every step minimises the
    word in lexicographic order.

    >>> reduced_word((1, 2, 3))
    ()
    >>> reduced_word((2, 3, 1))
    (1, 2)
    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    word = []
    while True:
        descents = left_descents(w)
        if not descents:
            return tuple(word)
        i = descents[0]
        word.append(i)
        w = mul_simple_left(w, i)


def word_to_perm(word: Iterable[int], n: int) -> Perm:
    """The product s_{i1} * s_{i2} * ... for ``word = (i1, i2, ...)``.

    >>> word_to_perm((1, 2), 3)
    (2, 3, 1)
    """
    w = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter s{i} out of range for n={n}")
        w = mul_simple_right(w, i)
    return w


def support(w: Perm) -> frozenset[int]:
    """The set of generator indices appearing in any reduced word of w.

    >>> sorted(support((3, 2, 1)))
    [1, 2]
    """
    return frozenset(reduced_word(w))


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Strong Bruhat order comparison u <= v.

    Uses the dominance criterion on sorted prefixes: u <= v iff for every
    prefix length i the sorted initial segments satisfy
    sorted(u[:i])[k] <= sorted(v[:i])[k] for all k.

    >>> s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
    >>> bruhat_leq(s1, compose(s1, s2)), bruhat_leq(s1, s2)
    (True, False)
    """
    _check_same_rank(u, v)
    pu: list[int] = []
    pv: list[int] = []
    for a, b in zip(u[:-1], v[:-1]):
        _insort(pu, a)
        _insort(pv, b)
        if any(x > y for x, y in zip(pu, pv)):
            return False
    return True


def _insort(lst: list[int], value: int) -> None:
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] < value:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, value)


def apply_twist(twist: Twist, w: Perm) -> Perm:
    """Image of w under the automorphism attached to ``twist``.

    >>> apply_twist(Twist.CONJ_BY_W0, simple_reflection(1, 3))
    (1, 3, 2)
    """
    if twist is Twist.TRIVIAL:
        return w
    w0 = longest_element(len(w))
    return compose(w0, compose(w, w0))


def twisted_support_closure(twist: Twist, w: Perm) -> frozenset[int]:
    """Union of the supports of all twist-iterates of w.

    The twist has finite order, so the union stabilises; it equals
    support(w) for the trivial twist.

    >>> sorted(twisted_support_closure(Twist.CONJ_BY_W0, simple_reflection(1, 4)))
    [1, 3]
    """
    out = set(support(w))
    v = apply_twist(twist, w)
    while v != w:
        out |= support(v)
        v = apply_twist(twist, v)
    return frozenset(out)


@dataclass(frozen=True)
class CosetData:
    """Minimal-length representatives of the left cosets W/W_I.

    ``poincare`` is the polynomial counting representatives by length; its
    value at a prime power q is the number of rational points of the partial
    flag variety G/P_I.
    """

    simple_indices: frozenset[int]
    representatives: tuple[Perm, ...]
    poincare: LaurentPoly


def coset_data(indices: Iterable[int], n: int) -> CosetData:
    """Coset data for the parabolic subgroup W_I generated by ``indices``.

    A permutation is the minimal-length element of its coset w*W_I exactly
    when it has no right descent inside I, which is what the filter below
    selects.

    >>> data = coset_data({1}, 3)
    >>> [length(r) for r in data.representatives]
    [0, 1, 2]
    """
    subset = frozenset(indices)
    for i in subset:
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range for n={n}")
    reps = tuple(
        w for w in all_elements(n) if not (subset & set(right_descents(w)))
    )
    poincare = LaurentPoly.zero()
    for rep in reps:
        poincare = poincare + LaurentPoly({length(rep): 1})
    return CosetData(subset, reps, poincare)


def sort_key(w: Perm) -> tuple[int, Perm]:
    """The fixed total order on S_n used everywhere: by (length, one-line)."""
    return (length(w), w)


def all_elements(n: int) -> Iterator[Perm]:
    """All of S_n, grouped by increasing length and lexicographic within.

    >>> [length(w) for w in all_elements(3)]
    [0, 1, 1, 2, 2, 3]
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    return iter(sorted(itertools.permutations(range(1, n + 1)), key=sort_key))


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse a permutation from one-line or word form.

    One-line form is comma separated ("2,3,1") and fixes the rank by itself;
    word form ("s1 s2" or "id") needs ``n``.  A rank given alongside the
    one-line form must agree with it.

    >>> parse_perm("2,3,1")
    (2, 3, 1)
    >>> parse_perm("s1 s2", 3)
    (2, 3, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text or text.isdigit():
        try:
            window = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad one-line permutation {text!r}") from exc
        if not is_valid(window):
            raise ValueError(f"{text!r} is not a permutation window")
        if n is not None and len(window) != n:
            raise ValueError(f"window {text!r} has rank {len(window)}, expected {n}")
        return window
    if n is None:
        raise ValueError("word form needs an explicit rank n")
    if text == "id":
        return identity(n)
    word = []
    for token in text.replace("*", " ").split():
        if not token.startswith("s") or not token[1:].isdigit():
            raise ValueError(f"bad word token {token!r}")
        word.append(int(token[1:]))
    return word_to_perm(word, n)


def render_perm(w: Perm) -> str:
    """Canonical text form: the lex-min reduced word, or "id".

    >>> render_perm((2, 3, 1))
    's1 s2'
    >>> render_perm((1, 2, 3))
    'id'
    """
    word = reduced_word(w)
    if not word:
        return "id"
    return " ".join(f"s{i}" for i in word)
