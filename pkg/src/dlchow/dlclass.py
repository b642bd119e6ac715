"""Closure classes of relative-position loci in the Schubert basis.

For w in S_n and an automorphism twist, the locus of Borel subgroups in
relative position w with their translate under a Frobenius (kind "dl"), a
regular semisimple conjugation (kind "ss") or a regular unipotent
conjugation (kind "unip") has a closure class in the Chow group of the
flag manifold.  This module computes those classes exactly, through two
independent routes, together with component counts, transition matrices
and the coincidence classes of the "ss" family.

Route one enumerates the pairs (u, v) with u * w * twist(v)^{-1} = w0 and
length(u) + length(v) = length(w0) - length(w) and sums the Schubert-basis
expansions of S_u * S_v weighted by q^{length(v)}.  Route two applies the
composite divided difference along w to the double top polynomial with the
y bank scaled by -q, applies omega_y for the trivial twist, sets y = x and
expands.  The two must agree coefficient for coefficient, which is the
strongest correctness property in the test suite.

Specialisations: the "ss" class is the q = 1 value of the untwisted "dl"
class, and the "unip" class rescales it by |W_I| / |W| for I the support
of w.  Component counts come from parabolic coset data and are
cross-checkable against the leading coefficient of the Hecke counting
polynomial f_w.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import permgroup as pg
from .permgroup import Perm, Twist
from .polyring import LaurentPoly, parse_laurent, parse_multipoly
from .schubert import Engine, SchubertVector, get_engine, qpoly, QPOLY_NAMES

__all__ = [
    "Kind",
    "ClassPath",
    "ClassReport",
    "TransitionMatrix",
    "EqualityGroup",
    "admissible_pairs",
    "class_X",
    "class_Y_ss",
    "class_Y_unip",
    "class_via_divided_diff",
    "components_X",
    "components_Y_ss",
    "transition_matrix",
    "equality_classes",
    "all_class_y_ss",
    "build_report",
    "report_to_json",
    "report_from_json",
    "cyclotomic_polynomial",
    "strip_cyclotomics",
    "parabolic_order",
]


class Kind(Enum):
    DL = "dl"
    REG_SS = "ss"
    REG_UNIP = "unip"


class ClassPath(Enum):
    PAIR_ENUMERATION = "pair-enumeration"
    DIVIDED_DIFFERENCE = "divided-difference"


def admissible_pairs(w: Perm, twist: Twist) -> list[tuple[Perm, Perm]]:
    """All (u, v) with u * w * twist(v)^{-1} = w0 and complementary lengths.

    Iterates v over the group and solves u = w0 * twist(v) * w^{-1}; the
    pair survives when length(u) + length(v) equals
    length(w0) - length(w).
    """
    n = len(w)
    w0 = pg.longest_element(n)
    winv = pg.inverse(w)
    budget = pg.length(w0) - pg.length(w)
    out = []
    for v in pg.all_elements(n):
        lv = pg.length(v)
        if lv > budget:
            break
        u = pg.compose(w0, pg.compose(pg.apply_twist(twist, v), winv))
        if pg.length(u) == budget - lv:
            out.append((u, v))
    return out


def _class_qdict(w: Perm, twist: Twist, engine: Engine) -> dict[Perm, dict[int, int]]:
    """Pair-enumeration class as {label: {q power: coefficient}}."""
    w0 = pg.longest_element(len(w))
    acc: dict[Perm, dict[int, int]] = {}
    for u, v in admissible_pairs(w, twist):
        lv = pg.length(v)
        for z, c in engine.product_expansion(u, v).items():
            slot = acc.setdefault(pg.compose(w0, z), {})
            slot[lv] = slot.get(lv, 0) + c
    return {key: {e: c for e, c in qc.items() if c} for key, qc in acc.items()}


def _qdict_to_vector(qdicts: dict[Perm, dict[int, int]], w: Perm) -> SchubertVector:
    vec = SchubertVector(
        {key: qpoly(qc) for key, qc in qdicts.items()}, len(w)
    )
    dim = vec.homogeneous_length()
    if vec.entries and dim != pg.length(w):
        raise ArithmeticError(
            f"class of {w} is supported in length {dim} instead of {pg.length(w)}"
        )
    return vec


def class_X(w: Perm, twist: Twist = Twist.TRIVIAL, engine: Engine | None = None) -> SchubertVector:
    """Closure class for the Frobenius kind, with polynomial coefficients in q.

    Every label in the result has length equal to length(w), and all
    coefficients are polynomials in q with nonnegative integer entries.
    """
    engine = engine or get_engine(len(w))
    return _qdict_to_vector(_class_qdict(w, twist, engine), w)


def class_Y_ss(w: Perm, engine: Engine | None = None) -> SchubertVector:
    """Closure class for a regular semisimple conjugation: untwisted, q = 1."""
    engine = engine or get_engine(len(w))
    totals: dict[Perm, dict[int, int]] = {}
    for key, counts in _raw_class_y_ss(w, engine).items():
        totals[key] = {0: counts}
    return _qdict_to_vector(totals, w)


def _raw_class_y_ss(w: Perm, engine: Engine) -> dict[Perm, int]:
    w0 = pg.longest_element(len(w))
    acc: dict[Perm, int] = {}
    for u, v in admissible_pairs(w, Twist.TRIVIAL):
        for z, c in engine.product_expansion(u, v).items():
            key = pg.compose(w0, z)
            acc[key] = acc.get(key, 0) + c
    return {key: c for key, c in acc.items() if c}


def parabolic_order(indices: frozenset[int] | set[int], n: int) -> int:
    """Order of the parabolic subgroup generated by the given indices.

    The generators split into maximal runs of consecutive indices; a run of
    length r contributes a factor (r + 1)!.
    """
    order = 1
    run = 0
    for i in range(1, n):
        if i in indices:
            run += 1
        else:
            order *= factorial(run + 1)
            run = 0
    order *= factorial(run + 1)
    return order


def class_Y_unip(w: Perm, engine: Engine | None = None) -> SchubertVector:
    """Closure class for a regular unipotent conjugation.

    Equals the "ss" class scaled by |W_I| / |W| with I = supp(w), so the
    coefficients are nonnegative rationals.
    """
    n = len(w)
    scale = Fraction(parabolic_order(pg.support(w), n), factorial(n))
    return class_Y_ss(w, engine).scale(scale)


def class_via_divided_diff(
    w: Perm, twist: Twist = Twist.TRIVIAL, engine: Engine | None = None
) -> SchubertVector:
    """The same class as :func:`class_X`, through the divided-difference route.

    Must agree with the pair enumeration coefficient for coefficient; the
    acceptance suite checks this across whole symmetric groups.
    """
    engine = engine or get_engine(len(w))
    w0 = pg.longest_element(len(w))
    raw = engine.closure_class(w, twisted=(twist is Twist.CONJ_BY_W0))
    relabeled = {pg.compose(w0, z): qc for z, qc in raw.items()}
    return _qdict_to_vector(relabeled, w)


def components_X(w: Perm, twist: Twist = Twist.TRIVIAL) -> LaurentPoly:
    """Component count of the Frobenius-kind locus, as a polynomial in q.

    This is the length generating polynomial of the cosets W / W_I where I
    is the twisted support closure of w; evaluating at a prime power gives
    the actual count.
    """
    indices = pg.twisted_support_closure(twist, w)
    return pg.coset_data(indices, len(w)).poincare


def components_Y_ss(w: Perm) -> int:
    """Component count |W / W_supp(w)| of the regular semisimple locus.

    The leading coefficient of the Hecke counting polynomial f_w computes
    the same number by an independent route.
    """
    n = len(w)
    return factorial(n) // parabolic_order(pg.support(w), n)


# -- reports ---------------------------------------------------------------------


@dataclass
class ClassReport:
    """Everything the command line emits for one class computation."""

    w: Perm
    twist: Twist
    kind: Kind
    vector: SchubertVector
    path: ClassPath
    component_count: LaurentPoly | int

    @property
    def n(self) -> int:
        return len(self.w)


def build_report(
    w: Perm,
    kind: Kind,
    twist: Twist = Twist.TRIVIAL,
    path: ClassPath = ClassPath.PAIR_ENUMERATION,
    engine: Engine | None = None,
) -> ClassReport:
    engine = engine or get_engine(len(w))
    if kind is Kind.DL:
        if path is ClassPath.DIVIDED_DIFFERENCE:
            vector = class_via_divided_diff(w, twist, engine)
        else:
            vector = class_X(w, twist, engine)
        components: LaurentPoly | int = components_X(w, twist)
    elif kind is Kind.REG_SS:
        vector = class_Y_ss(w, engine)
        components = components_Y_ss(w)
    else:
        vector = class_Y_unip(w, engine)
        # the regular unipotent locus is irreducible for every w
        components = 1
    return ClassReport(w, twist, kind, vector, path, components)


def report_to_json(report: ClassReport) -> str:
    components = report.component_count
    payload = {
        "n": report.n,
        "w": pg.render_perm(report.w),
        "twist": report.twist.value,
        "kind": report.kind.value,
        "path": report.path.value,
        "class": [
            {"v": pg.render_perm(w), "coeff": coeff.to_string(QPOLY_NAMES)}
            for w, coeff in report.vector.sorted_items()
        ],
        "components": components.to_string("q")
        if isinstance(components, LaurentPoly)
        else str(components),
    }
    return json.dumps(payload)


def report_from_json(text: str) -> ClassReport:
    payload = json.loads(text)
    n = payload["n"]
    kind = Kind(payload["kind"])
    entries = {
        pg.parse_perm(item["v"], n): parse_multipoly(item["coeff"], QPOLY_NAMES)
        for item in payload["class"]
    }
    components: LaurentPoly | int
    if kind is Kind.DL:
        components = parse_laurent(payload["components"], "q")
    else:
        components = int(payload["components"])
    return ClassReport(
        w=pg.parse_perm(payload["w"], n),
        twist=Twist(payload["twist"]),
        kind=kind,
        vector=SchubertVector(entries, n),
        path=ClassPath(payload["path"]),
        component_count=components,
    )


# -- transition matrices ----------------------------------------------------------


@dataclass
class TransitionMatrix:
    """Classes of the "dl" kind, column by column, over the fixed basis order."""

    n: int
    twist: Twist
    order: tuple[Perm, ...]
    entries: list[list[LaurentPoly]]
    det: LaurentPoly


def transition_matrix(
    n: int, twist: Twist = Twist.TRIVIAL, engine: Engine | None = None, max_rank: int = 6
) -> TransitionMatrix:
    """The |W| x |W| matrix whose column at w is the class of w.

    Row and column order is the (length, one-line) total order; the
    determinant is computed exactly by fraction-free elimination.
    """
    if n > max_rank:
        raise ValueError(f"rank {n} exceeds the configured bound {max_rank}")
    engine = engine or get_engine(n)
    order = tuple(pg.all_elements(n))
    position = {w: i for i, w in enumerate(order)}
    size = len(order)
    entries = [[LaurentPoly.zero() for _ in range(size)] for _ in range(size)]
    for j, w in enumerate(order):
        for key, qc in _class_qdict(w, twist, engine).items():
            entries[position[key]][j] = LaurentPoly(qc)
    det = _bareiss_det([row[:] for row in entries])
    return TransitionMatrix(n, twist, order, entries, det)


def _bareiss_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    size = len(m)
    sign = 1
    prev = LaurentPoly.one()
    for k in range(size - 1):
        if m[k][k].is_zero():
            pivot_row = next(
                (i for i in range(k + 1, size) if not m[i][k].is_zero()), None
            )
            if pivot_row is None:
                return LaurentPoly.zero()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = LaurentPoly.zero()
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det.scale(sign)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial, by exact division of q^d - 1.

    >>> cyclotomic_polynomial(6).to_string("q")
    'q^2-q+1'
    """
    out = LaurentPoly({d: 1, 0: -1})
    for e in range(1, d):
        if d % e == 0:
            out = out.divexact(cyclotomic_polynomial(e))
    return out


def strip_cyclotomics(
    p: LaurentPoly, max_d: int
) -> tuple[dict[int, int], int, LaurentPoly]:
    """Trial division by q and the cyclotomic polynomials up to max_d.

    Returns (multiplicities, power of q, remainder); the remainder is
    whatever does not divide out and is reported rather than guessed at.
    """
    from .polyring import ExactDivisionError

    if p.is_zero():
        return {}, 0, p
    q_power = max(p.min_exponent(), 0)
    if q_power:
        p = p.shift(-q_power)
    factors: dict[int, int] = {}
    for d in range(1, max_d + 1):
        phi = cyclotomic_polynomial(d)
        while True:
            try:
                p = p.divexact(phi)
            except ExactDivisionError:
                break
            factors[d] = factors.get(d, 0) + 1
    return factors, q_power, p


# -- coincidence classes of the regular semisimple family --------------------------


@dataclass
class EqualityGroup:
    """A maximal set of w sharing one "ss" class, with an explanation tag.

    The tag records whether the whole group is reachable from one member by
    the two proven moves, inversion and swapping length-additive factors of
    disjoint support: "inverse", "disjoint-support" or "mixed" when it is,
    "exceptional" when the moves leave the group in several orbits.
    """

    members: tuple[Perm, ...]
    explanation: str


def all_class_y_ss(n: int, engine: Engine | None = None) -> dict[Perm, dict[Perm, int]]:
    """The regular semisimple class of every w in S_n, as plain dicts."""
    engine = engine or get_engine(n)
    return {w: _raw_class_y_ss(w, engine) for w in pg.all_elements(n)}


def _exchange_neighbors(w: Perm, supports: dict[Perm, frozenset[int]]) -> set[Perm]:
    """Targets of the disjoint-support swap w = u * v -> v * u."""
    lw = pg.length(w)
    out = set()
    winv_table = supports  # supports doubles as the membership list
    for u in winv_table:
        lu = pg.length(u)
        if lu == 0 or lu >= lw:
            continue
        v = pg.compose(pg.inverse(u), w)
        if pg.length(v) + lu != lw:
            continue
        if supports[u] & supports[v]:
            continue
        out.add(pg.compose(v, u))
    return out


def _connected(members: set[Perm], neighbors: dict[Perm, set[Perm]]) -> bool:
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        for nb in neighbors[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == members


def equality_classes(
    n: int, engine: Engine | None = None, max_rank: int = 6
) -> list[EqualityGroup]:
    """Groups of w in S_n with identical "ss" classes, nontrivial ones only.

    Each group is closed under the proven moves transitively before the tag
    is decided; a group the moves do not connect is flagged "exceptional"
    rather than explained away.  Desk scale is rank at most 6.
    """
    if n > max_rank:
        raise ValueError(f"rank {n} exceeds the configured bound {max_rank}")
    engine = engine or get_engine(n)
    vectors = all_class_y_ss(n, engine)
    by_vector: dict[tuple, list[Perm]] = {}
    for w, vec in vectors.items():
        key = tuple(sorted(vec.items()))
        by_vector.setdefault(key, []).append(w)

    supports = {w: pg.support(w) for w in pg.all_elements(n)}
    groups = []
    for members in by_vector.values():
        if len(members) < 2:
            continue
        member_set = set(members)
        inv_edges: dict[Perm, set[Perm]] = {}
        exch_edges: dict[Perm, set[Perm]] = {}
        for w in members:
            winv = pg.inverse(w)
            if winv not in member_set:
                raise ArithmeticError(f"inverse of {w} left its coincidence class")
            inv_edges[w] = {winv} if winv != w else set()
            targets = _exchange_neighbors(w, supports)
            if not targets <= member_set:
                raise ArithmeticError(f"factor swap of {w} left its coincidence class")
            exch_edges[w] = targets - {w}
        both = {w: inv_edges[w] | exch_edges[w] for w in members}
        if not _connected(member_set, both):
            explanation = "exceptional"
        elif _connected(member_set, inv_edges):
            explanation = "inverse"
        elif _connected(member_set, exch_edges):
            explanation = "disjoint-support"
        else:
            explanation = "mixed"
        groups.append(
            EqualityGroup(tuple(sorted(members, key=pg.sort_key)), explanation)
        )
    groups.sort(key=lambda g: pg.sort_key(g.members[0]))
    return groups
