"""Schubert calculus in the coinvariant model of the type A flag manifold.

The degree-graded quotient of Z[x_1, ..., x_n] by the ideal J generated by
the positive-degree symmetric polynomials has the images of the Schubert
polynomials S_w, w in S_n, as a basis.  This module provides the seed
monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}, divided difference operators and
their compositions along reduced words, the double version of the top
polynomial, the involution omega_y, expansion of arbitrary polynomials in
the Schubert basis, and products of two Schubert polynomials expanded in
that basis.

Conventions, fixed once and tested:

* For a reduced word (i_1, ..., i_r) of w, the composite operator applies
  the last letter first, so that  d_w S_{w'} = S_{w' w^{-1}}  whenever
  length(w' w^{-1}) = length(w') - length(w), and 0 otherwise.
* ``expand_in_schubert_basis`` extracts the coefficient of S_w as the
  constant term of d_w applied to the input; the part of the input spanned
  by Schubert polynomials of permutations outside S_n lies in J and is
  discarded, after a soundness check.

The heavy lifting lives in a per-rank :class:`Engine`.  It stores monomials
as integers with six bits per exponent slot, reduces monomials to the span
of the staircase monomials x^a, a_i <= n - i, using the ideal membership of
the complete homogeneous polynomials h_{n-j+1}(x_1..x_j), and converts
staircase coordinates to Schubert coefficients by a unitriangular solve
(the exponent-reversed lexicographic leading monomial of S_w is x^code(w)
with coefficient 1).  Products obtained this way are cross-checked in the
test suite against the constant-term extraction and against a Monk-rule
oracle.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from threading import RLock
from typing import Iterable, Mapping, Union

from . import permgroup as pg
from .permgroup import Perm
from .polyring import BankLayout, MultiPoly, Scalar

__all__ = [
    "SchubertVector",
    "Engine",
    "get_engine",
    "staircase",
    "double_schubert_w0",
    "divided_difference",
    "divided_difference_word",
    "schubert_poly",
    "omega_y",
    "expand_in_schubert_basis",
    "schubert_product",
    "x_var",
    "y_var",
    "q_var",
    "qpoly",
    "QPOLY_NAMES",
]

_SHIFT = 6
_MASK = (1 << _SHIFT) - 1

QPOLY_NAMES = ("q",)


def qpoly(coeffs: Mapping[int, Scalar]) -> MultiPoly:
    """A univariate polynomial in q, as used for class coefficients."""
    return MultiPoly({(e,): c for e, c in coeffs.items()}, 1)


def x_var(i: int, n: int) -> MultiPoly:
    layout = BankLayout(n)
    return MultiPoly.variable(layout.x(i), layout.nvars)


def y_var(i: int, n: int) -> MultiPoly:
    layout = BankLayout(n)
    return MultiPoly.variable(layout.y(i), layout.nvars)


def q_var(n: int) -> MultiPoly:
    layout = BankLayout(n)
    return MultiPoly.variable(layout.q, layout.nvars)


@dataclass
class SchubertVector:
    """A finite Z[q]-combination of Schubert basis labels.

    ``entries`` maps permutations to single-variable polynomials in q
    (:class:`MultiPoly` with one slot); zero coefficients are never stored.
    """

    entries: dict[Perm, MultiPoly]
    n: int

    def __post_init__(self) -> None:
        self.entries = {w: c for w, c in self.entries.items() if not c.is_zero()}
        for w in self.entries:
            if len(w) != self.n:
                raise ValueError(f"label {w} does not live in S_{self.n}")

    def homogeneous_length(self) -> int | None:
        """Common length of all labels, or None for the zero vector."""
        lengths = {pg.length(w) for w in self.entries}
        if not lengths:
            return None
        if len(lengths) > 1:
            raise ValueError(f"vector is not homogeneous: lengths {sorted(lengths)}")
        return lengths.pop()

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.entries.values())

    def scale(self, c: Scalar) -> "SchubertVector":
        return SchubertVector(
            {w: coeff.scale(c) for w, coeff in self.entries.items()}, self.n
        )

    def map_labels(self, fn) -> "SchubertVector":
        return SchubertVector({fn(w): c for w, c in self.entries.items()}, self.n)

    def __add__(self, other: "SchubertVector") -> "SchubertVector":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        out = dict(self.entries)
        for w, c in other.entries.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return SchubertVector(out, self.n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchubertVector)
            and self.n == other.n
            and self.entries == other.entries
        )

    def sorted_items(self) -> list[tuple[Perm, MultiPoly]]:
        return sorted(self.entries.items(), key=lambda kv: pg.sort_key(kv[0]))

    def to_string(self) -> str:
        if not self.entries:
            return "0"
        parts = []
        for w, coeff in self.sorted_items():
            label = f"[{pg.render_perm(w)}]"
            text = coeff.to_string(QPOLY_NAMES)
            if text == "1":
                parts.append(label)
            elif len(coeff.terms) > 1:
                parts.append(f"({text})*{label}")
            else:
                parts.append(f"{text}*{label}")
        return " + ".join(parts)


def _pack(exps: Iterable[int]) -> int:
    p = 0
    for i, e in enumerate(exps):
        if e:
            if e > _MASK:
                raise OverflowError(f"exponent {e} exceeds packed width")
            p += e << (_SHIFT * i)
    return p


def _unpack(p: int, width: int) -> tuple[int, ...]:
    return tuple((p >> (_SHIFT * i)) & _MASK for i in range(width))


def _packed_degree(p: int) -> int:
    d = 0
    while p:
        d += p & _MASK
        p >>= _SHIFT
    return d


def _ddiff_packed(f: dict, slot: int) -> dict:
    """Divided difference for the adjacent slot pair (slot, slot + 1).

    Works monomial by monomial: the operator sends x^s y^r with s > r to
    the sum of x^a y^{s+r-1-a} over r <= a < s, with a sign flip when
    s < r, and kills symmetric monomials.  No division happens, so the
    result is exact for integer and Fraction coefficients alike.
    """
    sa = _SHIFT * slot
    sb = sa + _SHIFT
    out: dict = {}
    for p, c in f.items():
        ea = (p >> sa) & _MASK
        eb = (p >> sb) & _MASK
        if ea == eb:
            continue
        base = p - (ea << sa) - (eb << sb)
        if ea > eb:
            lo, hi = eb, ea
            cc = c
        else:
            lo, hi = ea, eb
            cc = -c
        tot = ea + eb - 1
        for va in range(lo, hi):
            key = base + (va << sa) + ((tot - va) << sb)
            s = out.get(key, 0) + cc
            if s:
                out[key] = s
            else:
                del out[key]
    return out


class Engine:
    """Per-rank Schubert calculus tables and kernels.

    All methods are deterministic; the memo tables are guarded by a lock so
    concurrent callers see a consistent single-writer view.  An optional
    ``product_cache`` with ``get((u, v))`` and ``put((u, v), expansion)``
    persists product expansions across runs.
    """

    def __init__(self, n: int, product_cache=None):
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.n = n
        self.layout = BankLayout(n)
        self.product_cache = product_cache
        self._lock = RLock()

        self.perms: list[Perm] = list(pg.all_elements(n))
        self.index: dict[Perm, int] = {w: i for i, w in enumerate(self.perms)}
        self.length: dict[Perm, int] = {w: pg.length(w) for w in self.perms}
        self.w0: Perm = pg.longest_element(n)
        self.id: Perm = pg.identity(n)
        self.top_length = self.length[self.w0]
        self.perms_by_length: list[list[Perm]] = [[] for _ in range(self.top_length + 1)]
        for w in self.perms:
            self.perms_by_length[self.length[w]].append(w)

        self._code_to_perm: dict[int, Perm] = {}
        self._code_of: dict[Perm, int] = {}
        for w in self.perms:
            code = self._lehmer_code(w)
            packed = _pack(code)
            self._code_of[w] = packed
            self._code_to_perm[packed] = w

        # staircase codes per degree, largest first in the exponent-reversed
        # lexicographic order used for the unitriangular solve
        self._blocks: dict[int, list[int]] = {}
        for w in self.perms:
            self._blocks.setdefault(self.length[w], []).append(self._code_of[w])
        for d, block in self._blocks.items():
            block.sort(key=lambda p: tuple(reversed(_unpack(p, n))), reverse=True)

        self._schubert: dict[Perm, dict[int, int]] = {
            self.w0: {_pack(range(n - 1, -1, -1)): 1}
        }
        self._reduce_memo: dict[int, tuple[tuple[int, int], ...]] = {}
        self._h_complements: dict[tuple[int, int], tuple[int, ...]] = {}
        self._product_memo: dict[tuple[Perm, Perm], dict[Perm, int]] = {}
        self._kernel_memo: dict[bool, dict[int, int]] = {}

    def _lehmer_code(self, w: Perm) -> tuple[int, ...]:
        n = self.n
        return tuple(
            sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)
        )

    # -- Schubert polynomials ------------------------------------------------

    def schubert_packed(self, w: Perm) -> dict[int, int]:
        """S_w as a packed-monomial dict with integer coefficients."""
        with self._lock:
            return self._schubert_locked(w)

    def _schubert_locked(self, w: Perm) -> dict[int, int]:
        cached = self._schubert.get(w)
        if cached is not None:
            return cached
        # first ascent i: applying the operator for slot i-1 to S_{w s_i}
        # drops the length by one and lands on S_w
        i = next(k for k in range(1, self.n) if w[k - 1] < w[k])
        parent = self._schubert_locked(pg.mul_simple_right(w, i))
        poly = _ddiff_packed(parent, i - 1)
        self._schubert[w] = poly
        return poly

    # -- reduction to the staircase span --------------------------------------

    def _h_complement(self, j0: int, k: int) -> tuple[int, ...]:
        """Packed monomials of degree k in slots 0..j0, except slot j0 alone.

        These are the lower monomials of h_k(x_1, ..., x_{j0+1}); the pure
        power sits in the ideal together with them, which drives the
        rewriting step in :meth:`_reduce`.
        """
        key = (j0, k)
        cached = self._h_complements.get(key)
        if cached is not None:
            return cached
        out = []
        for combo in itertools.combinations_with_replacement(range(j0 + 1), k):
            if all(c == j0 for c in combo):
                continue
            p = 0
            for slot in combo:
                p += 1 << (_SHIFT * slot)
            out.append(p)
        result = tuple(out)
        self._h_complements[key] = result
        return result

    def _reduce(self, p0: int) -> tuple[tuple[int, int], ...]:
        """Normal form of a monomial modulo J over the staircase monomials."""
        memo = self._reduce_memo
        hit = memo.get(p0)
        if hit is not None:
            return hit
        n = self.n
        stack = [p0]
        while stack:
            p = stack[-1]
            if p in memo:
                stack.pop()
                continue
            exps = _unpack(p, n)
            j0 = -1
            for j in range(n - 1, -1, -1):
                if exps[j] > n - 1 - j:
                    j0 = j
                    break
            if j0 < 0:
                memo[p] = ((p, 1),)
                stack.pop()
                continue
            k = n - j0
            rest = p - (k << (_SHIFT * j0))
            children = [rest + m for m in self._h_complement(j0, k)]
            missing = [c for c in children if c not in memo]
            if missing:
                stack.extend(missing)
                continue
            acc: dict[int, int] = {}
            for child in children:
                for sp, sc in memo[child]:
                    s = acc.get(sp, 0) - sc
                    if s:
                        acc[sp] = s
                    else:
                        del acc[sp]
            memo[p] = tuple(acc.items())
            stack.pop()
        return memo[p0]

    def reduce_poly(self, f: Mapping[int, int]) -> dict[int, int]:
        """Reduce a packed x-polynomial to staircase coordinates mod J."""
        with self._lock:
            out: dict[int, int] = {}
            for p, c in f.items():
                for sp, sc in self._reduce(p):
                    s = out.get(sp, 0) + c * sc
                    if s:
                        out[sp] = s
                    else:
                        del out[sp]
            return out

    def solve_staircase(self, vec: Mapping[int, Scalar]) -> dict[Perm, Scalar]:
        """Schubert coefficients of a polynomial given in staircase coordinates.

        Per degree block the change of basis is unitriangular: the leading
        staircase monomial of S_w is x^code(w), so peeling leaders from the
        largest down expresses the vector exactly.
        """
        by_degree: dict[int, dict[int, Scalar]] = {}
        for p, c in vec.items():
            if c:
                by_degree.setdefault(_packed_degree(p), {})[p] = c
        out: dict[Perm, Scalar] = {}
        for d, work in by_degree.items():
            block = self._blocks.get(d)
            if block is None:
                raise ValueError(f"degree {d} exceeds the top degree {self.top_length}")
            for code in block:
                c = work.get(code)
                if not c:
                    continue
                z = self._code_to_perm[code]
                out[z] = c
                for sp, sc in self.schubert_packed(z).items():
                    s = work.get(sp, 0) - c * sc
                    if s:
                        work[sp] = s
                    else:
                        work.pop(sp, None)
            if any(work.values()):
                raise ArithmeticError("staircase solve left a nonzero remainder")
        return out

    # -- products --------------------------------------------------------------

    def product_expansion(self, u: Perm, v: Perm) -> dict[Perm, int]:
        """Expansion of S_u * S_v in the Schubert basis of S_n, modulo J."""
        if u not in self.index or v not in self.index:
            raise ValueError(f"labels must belong to S_{self.n}")
        if self.index[v] < self.index[u]:
            u, v = v, u
        key = (u, v)
        hit = self._product_memo.get(key)
        if hit is not None:
            return hit
        if self.product_cache is not None:
            cached = self.product_cache.get(key)
            if cached is not None:
                self._product_memo[key] = cached
                return cached
        pu = list(self.schubert_packed(u).items())
        pv = list(self.schubert_packed(v).items())
        mono: dict[int, int] = {}
        for p1, c1 in pu:
            for p2, c2 in pv:
                k2 = p1 + p2
                mono[k2] = mono.get(k2, 0) + c1 * c2
        expansion = self.solve_staircase(self.reduce_poly(mono))
        for z, c in expansion.items():
            if c < 0:
                raise ArithmeticError(
                    f"negative structure constant at {z}; expansion is buggy"
                )
        with self._lock:
            self._product_memo[key] = expansion
        if self.product_cache is not None:
            self.product_cache.put(key, expansion)
        return expansion

    # -- constant-term extraction ----------------------------------------------

    def expand_const_diff(self, f: Mapping[int, Scalar]) -> dict[Perm, Scalar]:
        """Schubert coefficients via constant terms of composite differences.

        Walks the left weak order: the polynomial attached to z is d_z f,
        obtained from the parent s_i z (i the smallest left descent) by one
        more divided difference.  The coefficient of S_z is the constant
        term of d_z f.
        """
        out: dict[Perm, Scalar] = {}
        c0 = f.get(0)
        if c0:
            out[self.id] = c0
        level: dict[Perm, dict] = {self.id: dict(f)}
        dmax = max((_packed_degree(p) for p in f), default=-1)
        for k in range(1, dmax + 1):
            if not level or k > self.top_length:
                break
            nxt: dict[Perm, dict] = {}
            for z in self.perms_by_length[k]:
                i = pg.left_descents(z)[0]
                parent = pg.mul_simple_left(z, i)
                pf = level.get(parent)
                if not pf:
                    continue
                df = _ddiff_packed(pf, i - 1)
                if df:
                    nxt[z] = df
                    c = df.get(0)
                    if c:
                        out[z] = c
            level = nxt
        return out

    def pairing_with_top(self, f: Mapping[int, Scalar], g: Mapping[int, int]) -> Scalar:
        """Constant term of the full composite difference applied to f * g."""
        prod: dict[int, Scalar] = {}
        for p1, c1 in f.items():
            for p2, c2 in g.items():
                k = p1 + p2
                s = prod.get(k, 0) + c1 * c2
                if s:
                    prod[k] = s
                else:
                    del prod[k]
        for i in reversed(pg.reduced_word(self.w0)):
            prod = _ddiff_packed(prod, i - 1)
        return prod.get(0, 0)

    # -- the double kernel and the closure-class pipeline ------------------------

    def double_kernel(self, negate_y: bool = True) -> dict[int, int]:
        """The product of (x_i - y_j) over i + j <= n, packed over x, y, q.

        With ``negate_y`` the y bank enters as +q*y_j instead of -y_j, which
        is the version every class computation starts from.
        """
        key = bool(negate_y)
        with self._lock:
            cached = self._kernel_memo.get(key)
            if cached is not None:
                return cached
            n = self.n
            layout = self.layout
            kernel: dict[int, int] = {0: 1}
            for i in range(1, n):
                for j in range(1, n + 1 - i):
                    xk = 1 << (_SHIFT * layout.x(i))
                    if negate_y:
                        yk = (1 << (_SHIFT * layout.y(j))) + (1 << (_SHIFT * layout.q))
                        ysign = 1
                    else:
                        yk = 1 << (_SHIFT * layout.y(j))
                        ysign = -1
                    nxt: dict[int, int] = {}
                    for p, c in kernel.items():
                        k1 = p + xk
                        nxt[k1] = nxt.get(k1, 0) + c
                        k2 = p + yk
                        s = nxt.get(k2, 0) + ysign * c
                        if s:
                            nxt[k2] = s
                        else:
                            del nxt[k2]
                    kernel = nxt
            self._kernel_memo[key] = kernel
            return kernel

    def omega_y_packed(self, f: Mapping[int, Scalar]) -> dict:
        """Apply y_i -> -y_{n+1-i} to a packed polynomial over x, y, q."""
        n = self.n
        out: dict = {}
        for p, c in f.items():
            exps = _unpack(p, 2 * n + 1)
            ydeg = sum(exps[n : 2 * n])
            q = p
            for i in range(n):
                q -= exps[n + i] << (_SHIFT * (n + i))
            for i in range(n):
                e = exps[n + i]
                if e:
                    q += e << (_SHIFT * (2 * n - 1 - i))
            cc = -c if ydeg % 2 else c
            s = out.get(q, 0) + cc
            if s:
                out[q] = s
            else:
                del out[q]
        return out

    def substitute_y_to_x(self, f: Mapping[int, Scalar]) -> dict[int, dict[int, Scalar]]:
        """Set y_i = x_i; returns packed x-polynomials indexed by q-power."""
        n = self.n
        out: dict[int, dict[int, Scalar]] = {}
        for p, c in f.items():
            exps = _unpack(p, 2 * n + 1)
            qe = exps[2 * n]
            xp = _pack(exps[i] + exps[n + i] for i in range(n))
            slice_ = out.setdefault(qe, {})
            s = slice_.get(xp, 0) + c
            if s:
                slice_[xp] = s
            else:
                del slice_[xp]
        return out

    def closure_class(self, w: Perm, twisted: bool) -> dict[Perm, dict[int, int]]:
        """Schubert coefficients, as q-polynomials, of the closure class of w.

        Computes the composite difference of the double kernel along w in
        the x bank, applies omega_y in the untwisted case, sets y = x and
        expands.  Labels are returned on the Schubert-polynomial side; the
        caller relabels z -> w0*z for the geometric basis.
        """
        f: Mapping[int, int] = self.double_kernel()
        for i in reversed(pg.reduced_word(w)):
            f = _ddiff_packed(f, i - 1)
        if not twisted:
            f = self.omega_y_packed(f)
        out: dict[Perm, dict[int, int]] = {}
        for qe, slice_ in self.substitute_y_to_x(f).items():
            for z, c in self.solve_staircase(self.reduce_poly(slice_)).items():
                out.setdefault(z, {})[qe] = c
        return out


@lru_cache(maxsize=None)
def get_engine(n: int) -> Engine:
    """The shared in-memory engine for rank n (no disk-backed cache)."""
    return Engine(n)


# -- public operations ----------------------------------------------------------


def staircase(n: int) -> MultiPoly:
    """The seed monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}.

    >>> staircase(3).to_string(BankLayout(3).names)
    'x1^2*x2'
    """
    layout = BankLayout(n)
    exps = [0] * layout.nvars
    for i in range(1, n):
        exps[layout.x(i)] = n - i
    return MultiPoly.monomial(tuple(exps), 1, layout.nvars)


def double_schubert_w0(n: int, y_scale: Union[Scalar, MultiPoly]) -> MultiPoly:
    """The product of (x_i - y_scale * y_j) over i, j >= 1 with i + j <= n.

    ``y_scale`` may be a rational scalar or a polynomial such as the q
    variable; scaling by 0 recovers :func:`staircase`.
    """
    layout = BankLayout(n)
    if isinstance(y_scale, MultiPoly):
        scale = y_scale
    else:
        scale = MultiPoly.const(y_scale, layout.nvars)
    out = MultiPoly.const(1, layout.nvars)
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            xi = MultiPoly.variable(layout.x(i), layout.nvars)
            yj = MultiPoly.variable(layout.y(j), layout.nvars)
            out = out * (xi - scale * yj)
    return out


def _layout_of(f: MultiPoly) -> BankLayout:
    if f.nvars % 2 == 0 or f.nvars < 3:
        raise ValueError("expected a polynomial over the x, y, q bank layout")
    return BankLayout((f.nvars - 1) // 2)


def divided_difference(i: int, f: MultiPoly, bank: str = "x") -> MultiPoly:
    """The exact quotient (f - f with slots i, i+1 swapped) / (x_i - x_{i+1}).

    Acts on the chosen bank; the result is symmetric in the two variables
    involved.  Implemented monomial by monomial, so no division and hence
    no divisibility failure can occur.
    """
    layout = _layout_of(f)
    if not 1 <= i < layout.n:
        raise ValueError(f"index {i} out of range for n={layout.n}")
    if bank == "x":
        a = layout.x(i)
    elif bank == "y":
        a = layout.y(i)
    else:
        raise ValueError(f"unknown bank {bank!r}")
    out: dict[tuple[int, ...], Fraction] = {}
    for exps, c in f.terms.items():
        ea, eb = exps[a], exps[a + 1]
        if ea == eb:
            continue
        lo, hi = (eb, ea) if ea > eb else (ea, eb)
        cc = c if ea > eb else -c
        tot = ea + eb - 1
        base = list(exps)
        for va in range(lo, hi):
            base[a], base[a + 1] = va, tot - va
            key = tuple(base)
            s = out.get(key, Fraction(0)) + cc
            if s:
                out[key] = s
            else:
                del out[key]
    return MultiPoly(out, f.nvars)


def divided_difference_word(w: Perm, f: MultiPoly, bank: str = "x") -> MultiPoly:
    """Composite divided difference along any reduced word of w.

    The last letter acts first; with this order the composite sends S_{w'}
    to S_{w' w^{-1}} when the lengths subtract, and to 0 otherwise.  The
    result does not depend on the chosen reduced word.
    """
    for i in reversed(pg.reduced_word(w)):
        f = divided_difference(i, f, bank)
    return f


def _packed_to_multipoly(
    f: Mapping[int, Scalar], n: int, bank: str = "x"
) -> MultiPoly:
    layout = BankLayout(n)
    offset = 0 if bank == "x" else n
    terms: dict[tuple[int, ...], Scalar] = {}
    for p, c in f.items():
        exps = [0] * layout.nvars
        for i, e in enumerate(_unpack(p, n)):
            exps[offset + i] = e
        terms[tuple(exps)] = c
    return MultiPoly(terms, layout.nvars)


def schubert_poly(w: Perm, bank: str = "x") -> MultiPoly:
    """The Schubert polynomial attached to w, in the x or the y bank.

    >>> schubert_poly((3, 1, 2)).to_string(BankLayout(3).names)
    'x1^2'
    """
    if bank not in ("x", "y"):
        raise ValueError(f"unknown bank {bank!r}")
    engine = get_engine(len(w))
    return _packed_to_multipoly(engine.schubert_packed(w), len(w), bank)


def omega_y(f: MultiPoly, n: int | None = None) -> MultiPoly:
    """The substitution y_i -> -y_{n+1-i}; an involution on the y bank."""
    layout = _layout_of(f)
    if n is not None and n != layout.n:
        raise ValueError(f"rank {n} does not match the layout of the input")
    n = layout.n
    assignment = {
        layout.y(i): MultiPoly.variable(layout.y(n + 1 - i), layout.nvars).scale(-1)
        for i in range(1, n + 1)
    }
    for i in range(1, n + 1):
        assignment[layout.x(i)] = MultiPoly.variable(layout.x(i), layout.nvars)
    assignment[layout.q] = MultiPoly.variable(layout.q, layout.nvars)
    return f.substitute(assignment)


def _to_packed_x(f: MultiPoly, n: int) -> dict[int, Fraction]:
    layout = BankLayout(n)
    if f.nvars != layout.nvars:
        raise ValueError(f"expected {layout.nvars} variable slots, got {f.nvars}")
    bad = f.used_slots() - {layout.x(i) for i in range(1, n + 1)}
    if bad:
        raise ValueError("input must only involve the x bank")
    out: dict[int, Fraction] = {}
    for exps, c in f.terms.items():
        out[_pack(exps[:n])] = c
    return out


def expand_in_schubert_basis(
    f: MultiPoly, n: int, *, check_seed: int = 0
) -> SchubertVector:
    """Coefficients c_w with f congruent to sum of c_w S_w modulo J.

    Each c_w is the constant term of the composite divided difference along
    w applied to f.  Whatever is left after subtracting the combination
    lies in J; this is verified by re-extraction and by pairing the
    remainder against random combinations of complementary-degree Schubert
    polynomials, both of which must vanish.
    """
    engine = get_engine(n)
    fdict = _to_packed_x(f, n)
    coeffs = engine.expand_const_diff(fdict)
    remainder = dict(fdict)
    for w, c in coeffs.items():
        for p, sc in engine.schubert_packed(w).items():
            s = remainder.get(p, Fraction(0)) + (-c) * sc
            if s:
                remainder[p] = s
            else:
                remainder.pop(p, None)
    if remainder:
        _check_remainder_in_ideal(engine, remainder, check_seed)
    entries = {w: qpoly({0: c}) for w, c in coeffs.items()}
    return SchubertVector(entries, n)


def _check_remainder_in_ideal(engine: Engine, remainder: dict, seed: int) -> None:
    """Soundness net: the discarded part must lie in the ideal J."""
    if any(engine.expand_const_diff(remainder).values()):
        raise ArithmeticError("expansion remainder re-extracts nonzero coefficients")
    rng = random.Random(seed)
    by_degree: dict[int, dict[int, Fraction]] = {}
    for p, c in remainder.items():
        by_degree.setdefault(_packed_degree(p), {})[p] = c
    for d, part in by_degree.items():
        codegree = engine.top_length - d
        if codegree < 0:
            continue
        for _ in range(2):
            combo: dict[int, int] = {}
            for z in engine.perms_by_length[codegree]:
                r = rng.randrange(1, 1 << 20)
                for p, sc in engine.schubert_packed(z).items():
                    combo[p] = combo.get(p, 0) + r * sc
            if engine.pairing_with_top(part, combo):
                raise ArithmeticError(
                    "expansion remainder does not lie in the defining ideal"
                )


def schubert_product(u: Perm, v: Perm, engine: Engine | None = None) -> SchubertVector:
    """Expansion of S_u * S_v in the Schubert basis modulo J.

    Coefficients are the (nonnegative) type A structure constants; results
    are memoized in the engine and, when one is attached, in the on-disk
    product cache.
    """
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    engine = engine or get_engine(len(u))
    expansion = engine.product_expansion(u, v)
    return SchubertVector({w: qpoly({0: c}) for w, c in expansion.items()}, len(u))
