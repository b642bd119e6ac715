"""Exact sparse polynomial arithmetic over the rationals and the integers.

Two coefficient containers are provided, both immutable in practice (no
method mutates a stored value) and both storing no zero coefficients:

* :class:`MultiPoly`, a multivariate polynomial with ``Fraction``
  coefficients and fixed-width exponent tuples.  Variables are addressed by
  slot index; :class:`BankLayout` names the slots used by the Schubert
  machinery, namely x_1..x_n, y_1..y_n and a final q slot.
* :class:`LaurentPoly`, a univariate Laurent polynomial with integer
  coefficients; exponents may be negative.

All arithmetic is exact.  No floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

__all__ = [
    "MultiPoly",
    "LaurentPoly",
    "BankLayout",
    "ExactDivisionError",
    "eval_univariate",
    "leading_data",
    "parse_multipoly",
    "parse_laurent",
]

Scalar = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division expected to be exact is not."""


@dataclass(frozen=True)
class BankLayout:
    """Slot assignment for the variable banks x_1..x_n, y_1..y_n, q."""

    n: int

    def x(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"x index {i} out of range for n={self.n}")
        return i - 1

    def y(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"y index {i} out of range for n={self.n}")
        return self.n + i - 1

    @property
    def q(self) -> int:
        return 2 * self.n

    @property
    def nvars(self) -> int:
        return 2 * self.n + 1

    @property
    def names(self) -> tuple[str, ...]:
        return (
            tuple(f"x{i}" for i in range(1, self.n + 1))
            + tuple(f"y{i}" for i in range(1, self.n + 1))
            + ("q",)
        )


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MultiPoly:
    """Sparse multivariate polynomial over the rationals.

    ``terms`` maps exponent tuples (length ``nvars``, entries >= 0) to
    nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar], nvars: int):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not have {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _as_fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls({}, nvars)

    @classmethod
    def const(cls, c: Scalar, nvars: int) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, slot: int, nvars: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[slot] = 1
        return cls({tuple(exps): 1}, nvars)

    @classmethod
    def monomial(cls, exps: tuple[int, ...], c: Scalar, nvars: int) -> "MultiPoly":
        return cls({exps: c}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return MultiPoly(out, self.nvars)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(out, self.nvars)

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _as_fraction(c)
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly({e: v * c for e, v in self.terms.items()}, self.nvars)

    def used_slots(self) -> frozenset[int]:
        """Slots with a positive exponent somewhere in the polynomial."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return frozenset(used)

    def substitute(self, assignment: Mapping[int, "MultiPoly"]) -> "MultiPoly":
        """Simultaneous substitution of polynomials for variable slots.

        Every slot actually appearing in ``self`` must be covered by
        ``assignment``; replacement polynomials share this variable count.
        """
        missing = self.used_slots() - set(assignment)
        if missing:
            raise ValueError(f"no assignment for slots {sorted(missing)}")
        out = MultiPoly.zero(self.nvars)
        power_cache: dict[tuple[int, int], MultiPoly] = {}
        for exps, c in self.terms.items():
            term = MultiPoly.const(c, self.nvars)
            for slot, e in enumerate(exps):
                if not e:
                    continue
                key = (slot, e)
                if key not in power_cache:
                    power_cache[key] = assignment[slot] ** e
                term = term * power_cache[key]
            out = out + term
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lex order: total degree first, then exponents."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def to_string(self, names: tuple[str, ...]) -> str:
        if len(names) != self.nvars:
            raise ValueError("one name per variable slot is required")
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                text = _scalar_str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{_scalar_str(abs(c))}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += sign + text
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.terms!r}, nvars={self.nvars})"


def _scalar_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Sparse univariate Laurent polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int]):
        clean: dict[int, int] = {}
        for e, c in coeffs.items():
            if not isinstance(c, int):
                raise ValueError(f"non-integer coefficient {c!r}")
            if c:
                clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def x(cls, power: int = 1) -> "LaurentPoly":
        return cls({power: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power; invert exponents explicitly instead")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c: int) -> "LaurentPoly":
        if not c:
            return LaurentPoly.zero()
        return LaurentPoly({e: v * c for e, v in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def min_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises :class:`ExactDivisionError` on remainder.

        Both operands are shifted to honest polynomials first, so the method
        also divides Laurent polynomials whose quotient is Laurent.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = 0
        a, b = self, other
        if a.min_exponent() < 0 or b.min_exponent() < 0:
            shift = min(a.min_exponent(), 0) - min(b.min_exponent(), 0)
            a = a.shift(-min(a.min_exponent(), 0))
            b = b.shift(-min(b.min_exponent(), 0))
        num = {e: Fraction(c) for e, c in a.coeffs.items()}
        db, lb = b.degree(), b.coeffs[b.degree()]
        quo: dict[int, Fraction] = {}
        while num:
            da = max(num)
            if da < db:
                raise ExactDivisionError("nonzero remainder")
            e, c = da - db, num[da] / lb
            quo[e] = c
            for eb, cb in b.coeffs.items():
                k = eb + e
                s = num.get(k, Fraction(0)) - c * cb
                if s:
                    num[k] = s
                else:
                    num.pop(k, None)
        if any(c.denominator != 1 for c in quo.values()):
            raise ExactDivisionError("quotient is not integral")
        return LaurentPoly({e + shift: int(c) for e, c in quo.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def to_string(self, name: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, key=lambda e: (e == 0, -e)):
            c = self.coeffs[e]
            if e == 0:
                text = str(abs(c))
            else:
                body = name if e == 1 else f"{name}^{e}"
                text = body if abs(c) == 1 else f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += sign + text
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


def eval_univariate(p: Union[LaurentPoly, MultiPoly], value: Scalar) -> Fraction:
    """Evaluate a univariate polynomial exactly at a rational point.

    A nonzero value is required whenever negative exponents are present.
    """
    value = _as_fraction(value)
    if isinstance(p, LaurentPoly):
        items = list(p.coeffs.items())
    else:
        if p.nvars != 1:
            raise ValueError("eval_univariate needs a single-variable polynomial")
        items = [(e[0], c) for e, c in p.terms.items()]
    if value == 0 and any(e < 0 for e, _ in items):
        raise ZeroDivisionError("evaluation at 0 with negative exponents")
    total = Fraction(0)
    for e, c in items:
        total += _as_fraction(c) * value**e
    return total


def leading_data(p: Union[LaurentPoly, MultiPoly]) -> tuple[int, Scalar]:
    """Top degree and leading coefficient of a univariate polynomial."""
    if isinstance(p, LaurentPoly):
        if p.is_zero():
            raise ValueError("zero polynomial has no leading term")
        d = p.degree()
        return d, p.coeffs[d]
    if p.nvars != 1:
        raise ValueError("leading_data needs a single-variable polynomial")
    if p.is_zero():
        raise ValueError("zero polynomial has no leading term")
    d = max(e[0] for e in p.terms)
    return d, p.terms[(d,)]


def _tokenize_terms(text: str) -> list[tuple[int, str]]:
    """Split a polynomial string into (sign, body) pairs."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    parts: list[tuple[int, str]] = []
    sign, body = 1, ""
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        text = text[1:]
    depth = 0
    for ch in text:
        if ch in "+-" and depth == 0 and body and body[-1] not in "^*/":
            parts.append((sign, body))
            sign, body = (-1 if ch == "-" else 1), ""
        else:
            body += ch
    parts.append((sign, body))
    return parts


def parse_multipoly(text: str, names: tuple[str, ...]) -> MultiPoly:
    """Parse the canonical rendering produced by :meth:`MultiPoly.to_string`.

    >>> layout = BankLayout(2)
    >>> p = parse_multipoly("x1^2*x2-y1", layout.names)
    >>> p.to_string(layout.names)
    'x1^2*x2-y1'
    """
    nvars = len(names)
    slot_of = {name: i for i, name in enumerate(names)}
    out = MultiPoly.zero(nvars)
    for sign, body in _tokenize_terms(text):
        coeff = Fraction(sign)
        exps = [0] * nvars
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"empty factor in term {body!r}")
            base, _, power = factor.partition("^")
            e = int(power) if power else 1
            if base in slot_of:
                exps[slot_of[base]] += e
            else:
                coeff *= Fraction(base) ** e
        term = MultiPoly.monomial(tuple(exps), coeff, nvars)
        out = out + term
    return out


def parse_laurent(text: str, name: str = "x") -> LaurentPoly:
    """Parse the canonical rendering produced by :meth:`LaurentPoly.to_string`.

    >>> parse_laurent("x^2-2*x+1") == LaurentPoly({2: 1, 1: -2, 0: 1})
    True
    """
    out = LaurentPoly.zero()
    for sign, body in _tokenize_terms(text):
        coeff, exp = sign, 0
        for factor in body.split("*"):
            base, _, power = factor.partition("^")
            if base == name:
                exp += int(power) if power else 1
            else:
                coeff *= int(base) ** (int(power) if power else 1)
        out = out + LaurentPoly({exp: coeff})
    return out
