"""Command line front end.

Subcommands: class, equal-classes, transition, components, hecke,
schubert.  Exit codes: 0 success, 2 parse error, 3 resource cap exceeded,
4 cache corruption detected while --strict-cache is set (the cache is
rebuilt and the command still succeeds).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import dlclass, hecke, permgroup as pg, schubert
from .cache import ProductCache, cache_file_for
from .dlclass import ClassPath, Kind
from .permgroup import Perm, Twist
from .polyring import BankLayout, LaurentPoly, eval_univariate
from .schubert import Engine, SchubertVector, qpoly

__all__ = ["main"]

HARD_RANK_CAP = 8
RUNTIME_WARN_RANK = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class CliConfig:
    n: int
    twist: Twist
    q: int | None
    format: str
    cache_dir: Path
    strict_cache: bool
    jobs: int


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlchow",
        description="Exact Schubert-basis classes of relative-position loci in type A",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_w: bool = False, with_kind: bool = False):
        p.add_argument("--n", type=int, required=True, help="rank: the group is S_n")
        p.add_argument("--twist", choices=["trivial", "w0"], default="trivial")
        p.add_argument("--q", type=int, default=None, help="evaluate the symbolic result at q")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--strict-cache", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
        if with_w:
            p.add_argument("--w", required=True, help='permutation: "s1 s2" or "2,3,1"')
        if with_kind:
            p.add_argument("--kind", choices=["dl", "ss", "unip"], default="dl")

    add_common(sub.add_parser("class", help="closure class of one locus"), True, True)
    add_common(sub.add_parser("equal-classes", help="coincidence classes of the ss family"))
    add_common(sub.add_parser("transition", help="basis transition matrix and determinant"))
    add_common(sub.add_parser("components", help="component count"), True, True)
    hk = sub.add_parser("hecke", help="evaluate a T-basis expression")
    add_common(hk)
    hk.add_argument("--expr", required=True)
    sc = sub.add_parser("schubert", help="print one Schubert polynomial")
    add_common(sc, True)
    return parser


def _config_from(args: argparse.Namespace) -> CliConfig:
    n = args.n
    if n < 1:
        raise CliError(2, f"rank must be positive, got {n}")
    if n > HARD_RANK_CAP:
        raise CliError(3, f"rank {n} exceeds the hard cap {HARD_RANK_CAP}")
    if n > RUNTIME_WARN_RANK:
        print(f"warning: rank {n} computations may take a long time", file=sys.stderr)
    q = args.q
    if q is not None and q < 2:
        raise CliError(2, f"--q must be at least 2, got {q}")
    cache_dir = args.cache_dir or os.environ.get("DLCHOW_CACHE") or ".dlchow-cache"
    jobs = max(1, args.jobs)
    return CliConfig(
        n=n,
        twist=Twist(args.twist),
        q=q,
        format=args.format,
        cache_dir=Path(cache_dir),
        strict_cache=args.strict_cache,
        jobs=jobs,
    )


def _parse_w(text: str, n: int) -> Perm:
    try:
        return pg.parse_perm(text, n)
    except ValueError as exc:
        raise CliError(2, f"cannot parse permutation: {exc}") from exc


def _coeff_text(coeff, q: int | None) -> str:
    if q is not None:
        value = eval_univariate(coeff, q)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return coeff.to_string(schubert.QPOLY_NAMES)


def _vector_text(vector: SchubertVector, q: int | None) -> str:
    if q is None:
        return vector.to_string()
    evaluated = SchubertVector(
        {w: qpoly({0: eval_univariate(c, q)}) for w, c in vector.entries.items()},
        vector.n,
    )
    return evaluated.to_string()


def _components_text(components, q: int | None) -> str:
    if isinstance(components, LaurentPoly):
        if q is not None:
            return str(eval_univariate(components, q))
        return components.to_string("q")
    return str(components)


def cmd_class(args: argparse.Namespace, config: CliConfig, engine: Engine) -> None:
    w = _parse_w(args.w, config.n)
    report = dlclass.build_report(
        w, Kind(args.kind), config.twist, ClassPath.PAIR_ENUMERATION, engine
    )
    if config.format == "json":
        if config.q is not None:
            raise CliError(2, "--q applies to text and csv output only")
        print(dlclass.report_to_json(report))
    elif config.format == "csv":
        print("w,basis_element,coefficient")
        w_text = pg.render_perm(report.w)
        for key, coeff in report.vector.sorted_items():
            print(f'"{w_text}","{pg.render_perm(key)}","{_coeff_text(coeff, config.q)}"')
    else:
        print(_vector_text(report.vector, config.q))


def cmd_components(args: argparse.Namespace, config: CliConfig, engine: Engine) -> None:
    w = _parse_w(args.w, config.n)
    kind = Kind(args.kind)
    if kind is Kind.DL:
        components = dlclass.components_X(w, config.twist)
    elif kind is Kind.REG_SS:
        components = dlclass.components_Y_ss(w)
    else:
        components = 1
    if config.format == "json":
        print(json.dumps({
            "n": config.n,
            "w": pg.render_perm(w),
            "kind": kind.value,
            "twist": config.twist.value,
            "components": _components_text(components, config.q),
        }))
    elif config.format == "csv":
        raise CliError(2, "csv output is only defined for the class subcommand")
    else:
        print(_components_text(components, config.q))


def cmd_equal_classes(args: argparse.Namespace, config: CliConfig, engine: Engine) -> None:
    if config.format == "csv":
        raise CliError(2, "csv output is only defined for the class subcommand")
    if config.jobs > 1:
        # warm the product memo in parallel; the grouping pass reuses it
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            list(pool.map(
                lambda w: dlclass.class_Y_ss(w, engine), pg.all_elements(config.n)
            ))
    groups = dlclass.equality_classes(config.n, engine)
    if config.format == "json":
        payload = [
            {
                "members": [pg.render_perm(w) for w in g.members],
                "explanation": g.explanation,
            }
            for g in groups
        ]
        print(json.dumps(payload))
        return
    if not groups:
        print("no nontrivial groups")
        return
    for g in groups:
        members = ", ".join(pg.render_perm(w) for w in g.members)
        print(f"{{{members}}}  {g.explanation}", flush=True)


def _det_line(det: LaurentPoly, n: int) -> str:
    factors, q_power, remainder = dlclass.strip_cyclotomics(det, 2 * n)
    parts = []
    if q_power:
        parts.append("q" if q_power == 1 else f"q^{q_power}")
    for d in sorted(factors):
        base = f"({dlclass.cyclotomic_polynomial(d).to_string('q')})"
        m = factors[d]
        parts.append(base if m == 1 else f"{base}^{m}")
    is_unit = not remainder.is_zero() and remainder.degree() == 0 and abs(remainder.coeffs[0]) == 1
    if not is_unit:
        parts.append(f"({remainder.to_string('q')})")
    if not parts:
        parts.append("1")
    return "det = ±" + "*".join(parts)


def cmd_transition(args: argparse.Namespace, config: CliConfig, engine: Engine) -> None:
    if config.format == "csv":
        raise CliError(2, "csv output is only defined for the class subcommand")
    matrix = dlclass.transition_matrix(config.n, config.twist, engine)
    if config.format == "json":
        factors, q_power, remainder = dlclass.strip_cyclotomics(matrix.det, 2 * config.n)
        print(json.dumps({
            "n": matrix.n,
            "twist": matrix.twist.value,
            "order": [pg.render_perm(w) for w in matrix.order],
            "matrix": [[e.to_string("q") for e in row] for row in matrix.entries],
            "det": matrix.det.to_string("q"),
            "det_cyclotomic_multiplicities": {str(d): m for d, m in factors.items()},
            "det_q_power": q_power,
            "det_unfactored": remainder.to_string("q"),
        }))
        return
    width = max(len(e.to_string("q")) for row in matrix.entries for e in row)
    for label, row in zip(matrix.order, matrix.entries):
        cells = "  ".join(e.to_string("q").rjust(width) for e in row)
        print(f"[{cells}]   # row {pg.render_perm(label)}")
    print(_det_line(matrix.det, config.n))


def cmd_hecke(args: argparse.Namespace, config: CliConfig) -> None:
    if config.format == "csv":
        raise CliError(2, "csv output is only defined for the class subcommand")
    try:
        value = _eval_hecke_expr(args.expr, config.n)
    except ValueError as exc:
        raise CliError(2, f"cannot parse Hecke expression: {exc}") from exc
    if config.format == "json":
        print(json.dumps({
            "n": config.n,
            "expr": args.expr,
            "value": hecke.render_hecke(value),
        }))
    else:
        print(hecke.render_hecke(value))


def cmd_schubert(args: argparse.Namespace, config: CliConfig) -> None:
    if config.format == "csv":
        raise CliError(2, "csv output is only defined for the class subcommand")
    w = _parse_w(args.w, config.n)
    poly = schubert.schubert_poly(w)
    text = poly.to_string(BankLayout(config.n).names)
    if config.format == "json":
        print(json.dumps({"n": config.n, "w": pg.render_perm(w), "poly": text}))
    else:
        print(text)


# -- Hecke expression parsing -------------------------------------------------


class _HeckeParser:
    """Recursive descent over: expr := term (+|- term)*, term := factor
    ('*' factor)*, factor := atom ('^' int)?, atom := T[word] | x |
    integer | (expr).  Scalars stay Laurent until they must act on a
    T-element, so x^-1 works wherever it makes sense."""

    def __init__(self, text: str, n: int):
        self.text = text
        self.pos = 0
        self.n = n

    def parse(self) -> hecke.HeckeElement:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at {self.text[self.pos:]!r}")
        return self._promote(value)

    def _promote(self, value) -> hecke.HeckeElement:
        if isinstance(value, LaurentPoly):
            return hecke.t_basis(pg.identity(self.n)).scale(value)
        return value

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self):
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self._term()
            if isinstance(value, LaurentPoly) and isinstance(rhs, LaurentPoly):
                value = value + rhs if op == "+" else value - rhs
            else:
                value = self._promote(value)
                rhs = self._promote(rhs)
                value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._factor()
        while self._peek() == "*":
            self.pos += 1
            rhs = self._factor()
            value = self._mul(value, rhs)
        return value

    def _mul(self, lhs, rhs):
        if isinstance(lhs, LaurentPoly) and isinstance(rhs, LaurentPoly):
            return lhs * rhs
        if isinstance(lhs, LaurentPoly):
            return rhs.scale(lhs)
        if isinstance(rhs, LaurentPoly):
            return lhs.scale(rhs)
        return hecke.t_mul(lhs, rhs)

    def _factor(self):
        value = self._atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            start = self.pos
            if self._peek() == "-":
                self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise ValueError("missing exponent after ^")
            k = int(self.text[start : self.pos])
            value = self._power(value, k)
        return value

    def _power(self, value, k: int):
        if isinstance(value, LaurentPoly):
            if k >= 0:
                return value**k
            if len(value.coeffs) != 1:
                raise ValueError("negative power of a non-monomial scalar")
            (e, c), = value.coeffs.items()
            if abs(c) != 1:
                raise ValueError("negative power of a non-invertible scalar")
            return LaurentPoly({e * k: c if k % 2 else 1})
        if k < 0:
            raise ValueError("negative power of a T-element; use explicit inverses")
        out = hecke.t_basis(pg.identity(self.n))
        for _ in range(k):
            out = hecke.t_mul(out, value)
        return out

    def _atom(self):
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise ValueError("missing closing parenthesis")
            self.pos += 1
            return value
        if ch == "-":
            self.pos += 1
            value = self._atom()
            if isinstance(value, LaurentPoly):
                return value.scale(-1)
            return value.scale(LaurentPoly.const(-1))
        if self.text.startswith("T[", self.pos):
            end = self.text.find("]", self.pos)
            if end < 0:
                raise ValueError("missing closing bracket in T[...]")
            word = self.text[self.pos + 2 : end]
            self.pos = end + 1
            return hecke.t_basis(pg.parse_perm(word, self.n))
        if ch == "x":
            self.pos += 1
            return LaurentPoly.x()
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return LaurentPoly.const(int(self.text[start : self.pos]))
        raise ValueError(f"unexpected character {ch!r}")


def _eval_hecke_expr(text: str, n: int) -> hecke.HeckeElement:
    return _HeckeParser(text, n).parse()


# -- entry point ----------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    cache: ProductCache | None = None
    try:
        config = _config_from(args)
        if args.command in ("class", "equal-classes", "transition"):
            cache = ProductCache(cache_file_for(config.cache_dir, config.n), config.n)
            engine = Engine(config.n, product_cache=cache)
        else:
            engine = None
        if args.command == "class":
            cmd_class(args, config, engine)
        elif args.command == "equal-classes":
            cmd_equal_classes(args, config, engine)
        elif args.command == "transition":
            cmd_transition(args, config, engine)
        elif args.command == "components":
            cmd_components(args, config, engine)
        elif args.command == "hecke":
            cmd_hecke(args, config)
        elif args.command == "schubert":
            cmd_schubert(args, config)
    except ValueError as exc:
        # rank bounds of the sweep and matrix operations
        print(f"error: {exc}", file=sys.stderr)
        if cache is not None:
            cache.close()
        return 3
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if cache is not None:
            cache.close()
        return exc.code
    if cache is not None:
        cache.compact()
        if config.strict_cache and cache.corruption_seen:
            print("warning: cache corruption detected; file rebuilt", file=sys.stderr)
            return 4
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
