"""The Iwahori-Hecke algebra of S_n over integer Laurent polynomials.

Elements are stored in coordinates over the standard basis {T_w}: the
generators satisfy (T_s - x)(T_s + 1) = 0, and T_w T_{w'} = T_{ww'} when
the lengths add.  All coefficients stay in Z[x, x^-1]; nothing here ever
needs a larger base ring.

Besides products and inverses the module computes the two counting
polynomials used by the component-count results: the coefficient of
T_{w'^{-1}} in T_w T_{w'^{-1}}, its sum f_w over all w', and the
polynomial (-x)^{length(w)} (T_{w^{-1}}^{-1} : T_id), which is monic of
degree length(w).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import permgroup as pg
from .permgroup import Perm
from .polyring import LaurentPoly

__all__ = [
    "HeckeElement",
    "t_basis",
    "t_mul",
    "t_inverse",
    "r_polynomial",
    "f_coefficient",
    "f_w",
    "f_coefficient_table",
    "render_hecke",
]


@dataclass
class HeckeElement:
    """Coordinates over the T-basis; zero coordinates are never stored."""

    coords: dict[Perm, LaurentPoly]
    n: int

    def __post_init__(self) -> None:
        self.coords = {w: c for w, c in self.coords.items() if not c.is_zero()}
        for w in self.coords:
            if len(w) != self.n:
                raise ValueError(f"label {w} does not live in S_{self.n}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        out = dict(self.coords)
        for w, c in other.coords.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return HeckeElement(out, self.n)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, poly: LaurentPoly) -> "HeckeElement":
        return HeckeElement({w: c * poly for w, c in self.coords.items()}, self.n)

    def coefficient(self, w: Perm) -> LaurentPoly:
        return self.coords.get(w, LaurentPoly.zero())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.n == other.n
            and self.coords == other.coords
        )


def t_basis(w: Perm, n: int | None = None) -> HeckeElement:
    """The basis element T_w.

    >>> t_basis((2, 1, 3)).coords
    {(2, 1, 3): LaurentPoly({0: 1})}
    """
    n = n if n is not None else len(w)
    return HeckeElement({w: LaurentPoly.one()}, n)


def _mul_generator(coords: dict[Perm, LaurentPoly], i: int) -> dict[Perm, LaurentPoly]:
    """Right multiplication of a coordinate vector by T_{s_i}."""
    out: dict[Perm, LaurentPoly] = {}
    for w, c in coords.items():
        ws = pg.mul_simple_right(w, i)
        if w[i - 1] < w[i]:
            prev = out.get(ws)
            out[ws] = c if prev is None else prev + c
        else:
            # T_w T_s = x T_{ws} + (x - 1) T_w for a right descent
            up = c.shift(1)
            prev = out.get(ws)
            out[ws] = up if prev is None else prev + up
            stay = up - c
            prev = out.get(w)
            out[w] = stay if prev is None else prev + stay
    return {w: c for w, c in out.items() if not c.is_zero()}


def _mul_by_t(a: HeckeElement, v: Perm) -> HeckeElement:
    coords = a.coords
    for i in pg.reduced_word(v):
        coords = _mul_generator(coords, i)
    return HeckeElement(coords, a.n)


def t_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the algebra, bilinear over Z[x, x^-1].

    >>> s = (2, 1, 3)
    >>> p = t_mul(t_basis(s), t_basis(s))
    >>> p.coefficient(s) == LaurentPoly({1: 1, 0: -1})
    True
    >>> p.coefficient((1, 2, 3)) == LaurentPoly({1: 1})
    True
    """
    if a.n != b.n:
        raise ValueError("rank mismatch")
    out = HeckeElement({}, a.n)
    for v, coeff in b.coords.items():
        out = out + _mul_by_t(a, v).scale(coeff)
    return out


def _mul_generator_inverse(a: HeckeElement, i: int) -> HeckeElement:
    """Right multiplication by T_{s_i}^{-1} = x^-1 T_{s_i} + (x^-1 - 1) T_id."""
    xinv = LaurentPoly({-1: 1})
    xinv_minus_one = LaurentPoly({-1: 1, 0: -1})
    via_s = HeckeElement(_mul_generator(a.coords, i), a.n).scale(xinv)
    return via_s + a.scale(xinv_minus_one)


def t_inverse(w: Perm) -> HeckeElement:
    """The inverse of T_w, computed along a reduced word.

    >>> n3id = (1, 2, 3)
    >>> t_inverse(n3id) == t_basis(n3id)
    True
    """
    n = len(w)
    out = t_basis(pg.identity(n))
    for i in reversed(pg.reduced_word(w)):
        out = _mul_generator_inverse(out, i)
    return out


def r_polynomial(w: Perm) -> LaurentPoly:
    """(-x)^length(w) times the T_id coordinate of the inverse of T_{w^-1}.

    The result is an honest polynomial, monic of degree length(w).

    >>> r_polynomial((2, 1)) == LaurentPoly({1: 1, 0: -1})
    True
    """
    ell = pg.length(w)
    coeff = t_inverse(pg.inverse(w)).coefficient(pg.identity(len(w)))
    sign = LaurentPoly({ell: (-1) ** ell if ell % 2 else 1})
    out = coeff * sign
    if not out.is_zero() and out.min_exponent() < 0:
        raise ArithmeticError("expected an honest polynomial")
    if out.coeffs.get(ell) != 1:
        raise ArithmeticError("expected a monic polynomial of the full length")
    return out


def f_coefficient(w: Perm, w_prime: Perm) -> LaurentPoly:
    """Coefficient of T_{w'^{-1}} in the product T_w T_{w'^{-1}}.

    >>> s = (2, 1, 3)
    >>> f_coefficient(s, s) == LaurentPoly({1: 1, 0: -1})
    True
    """
    if len(w) != len(w_prime):
        raise ValueError("rank mismatch")
    target = pg.inverse(w_prime)
    return _mul_by_t(t_basis(w), target).coefficient(target)


def f_coefficient_table(w: Perm) -> dict[Perm, LaurentPoly]:
    """All diagonal coefficients at once: v -> (T_w T_v : T_v).

    One pass over the right weak order extends a reduced word by a single
    letter per element, so the whole table costs |W| generator products.
    """
    n = len(w)
    products: dict[Perm, dict[Perm, LaurentPoly]] = {pg.identity(n): dict(t_basis(w).coords)}
    out: dict[Perm, LaurentPoly] = {}
    for v in pg.all_elements(n):
        if v not in products:
            i = pg.right_descents(v)[0]
            parent = pg.mul_simple_right(v, i)
            products[v] = _mul_generator(products[parent], i)
        coords = products[v]
        out[v] = coords.get(v, LaurentPoly.zero())
    return out


def f_w(w: Perm) -> LaurentPoly:
    """The point-count polynomial: the sum of f_coefficient(w, w') over w'.

    Has degree exactly length(w); its leading coefficient counts the cosets
    W / W_supp(w).

    >>> f_w((1, 2, 3)) == LaurentPoly.const(6)
    True
    """
    total = LaurentPoly.zero()
    for value in f_coefficient_table(w).values():
        total = total + value
    if not total.is_zero() and total.min_exponent() < 0:
        raise ArithmeticError("expected an honest polynomial")
    return total


def render_hecke(a: HeckeElement) -> str:
    """Text form such as "(x-1)*T[s1] + x*T[id]", longest labels first."""
    if not a.coords:
        return "0"
    parts = []
    for w in sorted(a.coords, key=pg.sort_key, reverse=True):
        coeff = a.coords[w]
        label = f"T[{pg.render_perm(w)}]"
        text = coeff.to_string()
        if text == "1":
            parts.append(label)
        elif len(coeff.coeffs) > 1:
            parts.append(f"({text})*{label}")
        else:
            parts.append(f"{text}*{label}")
    return " + ".join(parts)
