"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 internal
verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import fano
from .discgroup import discriminant_group
from .errors import DomainError, InternalVerificationFailed
from .lattice import BUILTIN_NAMES, Lattice, builtin_lattice

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# ---------------------------------------------------------------------------
# input


def parse_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON matrix: {exc}") from None
    if (not isinstance(data, list) or not data
            or not all(isinstance(r, list) and len(r) == len(data) for r in data)
            or not all(isinstance(x, int) and not isinstance(x, bool) for r in data for x in r)):
        raise ParseError("expected a square JSON array of integers")
    return tuple(tuple(r) for r in data)


def load_lattice(source: str) -> Lattice:
    """A builtin name, an inline JSON matrix, or a path to a file holding one.

    Files may also hold the lattice JSON object {"label": ..., "gram": ...}.
    """
    if source in BUILTIN_NAMES:
        return builtin_lattice(source)
    text = source
    label = None
    if not source.lstrip().startswith("[") and os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
        label = os.path.basename(source)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not a JSON object: {exc}") from None
        if not isinstance(obj, dict) or "gram" not in obj:
            raise ParseError("lattice object needs a 'gram' field")
        return Lattice(parse_matrix(json.dumps(obj["gram"])), obj.get("label") or label)
    if not text.lstrip().startswith("["):
        raise ParseError(f"unknown lattice {source!r}; builtins: {', '.join(BUILTIN_NAMES)}")
    return Lattice(parse_matrix(text), label)


# ---------------------------------------------------------------------------
# rendering


def _fmt_matrix(m) -> str:
    return "[" + ", ".join("[" + ",".join(str(x) for x in r) + "]" for r in m) + "]"


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def _yn(x: bool) -> str:
    return "yes" if x else "no"


def cmd_lattice_info(source: str) -> tuple[dict, str]:
    l = load_lattice(source)
    D = discriminant_group(l)
    p, n = l.signature
    data = {
        "lattice": l.to_json(),
        "rank": l.rank,
        "signature": [p, n],
        "even": l.is_even,
        "det": l.det,
        "abs_det": abs(l.det),
        "discriminant_group": D.to_json(),
    }
    group = " x ".join(f"Z/{d}" for d in D.invariant_factors) or "0"
    lines = [
        f"lattice:     {l.label or _fmt_matrix(l.gram)}",
        f"rank:        {l.rank}",
        f"signature:   ({p},{n})",
        f"parity:      {'even' if l.is_even else 'odd'}",
        f"det:         {l.det} (|det| = {abs(l.det)})",
        f"D(L):        {group}",
    ]
    if D.ngens:
        lines.append("b table:")
        lines += ["  " + " ".join(str(x).rjust(6) for x in row) for row in D.bform]
        if D.qform is not None:
            lines.append("q values:    " + " ".join(str(x) for x in D.qform))
    return data, "\n".join(lines)


def cmd_classify(d: int) -> tuple[dict, str]:
    reps = fano.classify_special_sublattice(d)
    data = {
        "d": d,
        "case": fano.case_of(d),
        "canonical_gram": [list(r) for r in fano.canonical_gram(d)],
        "orbits": [
            {"divisor_label": k.divisor_label.value, "divisor": k.divisor,
             "gram": [list(r) for r in k.gram],
             "ideals": list(fano.ideals(k.embedding)),
             "w": list(k.w.coords)}
            for k in reps
        ],
    }
    rows = [[k.divisor, _fmt_matrix(k.gram), "%dZ, %dZ" % fano.ideals(k.embedding)]
            for k in reps]
    text = (f"d = {d} (case {fano.case_of(d)}), {len(reps)} orbit(s), canonical Gram "
            f"{_fmt_matrix(fano.canonical_gram(d))}\n"
            + _table(["divisor", "gram (u, v, g)", "K.u, K.v"], rows))
    return data, text


def cmd_assoc(d: int) -> tuple[dict, str]:
    k3 = fano.has_associated_k3(d)
    cubic = fano.has_associated_cubic(d)
    data = {
        "d": d,
        "k3": k3,
        "k3_methods": {"prime_criterion": fano.k3_prime_criterion(d),
                       "congruence_oracle": fano.k3_congruence_oracle(d)},
        "cubic": cubic,
        "cubic_methods": {"prime_criterion": fano.cubic_prime_criterion(d),
                          "congruence_oracle": fano.cubic_congruence_oracle(d)},
    }
    text = (f"d = {d}\n"
            f"K3: {_yn(k3)} (prime criterion {_yn(fano.k3_prime_criterion(d))}, "
            f"congruence {_yn(fano.k3_congruence_oracle(d))})\n"
            f"cubic: {_yn(cubic)} (prime criterion {_yn(fano.cubic_prime_criterion(d))}, "
            f"congruence {_yn(fano.cubic_congruence_oracle(d))})")
    return data, text


def cmd_sweep(d_max: int) -> tuple[dict, str]:
    rows = fano.sweep(d_max)
    data = {"d_max": d_max, "rows": [r.to_json() for r in rows]}
    text = _table(["d", "orbits", "labels", "K3", "cubic"],
                  [[r.d, r.n_orbits, ",".join(l.divisor(r.d) for l in r.labels),
                    _yn(r.k3), _yn(r.cubic)] for r in rows])
    return data, text


def cmd_examples() -> tuple[dict, str]:
    rows = fano.example_family_table()
    data = {"rows": [r.to_json() for r in rows]}
    text = _table(["family", "a", "b", "self_int", "d", "divisor", "gram"],
                  [[r.family, r.a, r.b, r.self_int, r.d, r.divisor, _fmt_matrix(r.gram)]
                   for r in rows])
    return data, text


def cmd_th81(e_max: int) -> tuple[dict, str]:
    rows = fano.th81_targets(e_max)
    data = {"e_max": e_max, "rows": [r.to_json() for r in rows]}
    text = _table(["family", "e", "gram", "d", "divisor"],
                  [[r.family, r.e, _fmt_matrix(r.gram), r.d, r.divisor] for r in rows])
    return data, text


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fano10", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        return sp

    add("lattice-info", "invariants of a lattice").add_argument(
        "lattice", help=f"builtin ({', '.join(BUILTIN_NAMES)}), inline JSON or file")
    add("classify", "special sublattices of discriminant d").add_argument("d", type=int)
    add("assoc", "associated K3 surface / cubic fourfold for d").add_argument("d", type=int)
    add("sweep", "table over admissible d <= d_max").add_argument("d_max", type=int)
    add("examples", "discriminants of the example families")
    add("th81", "lattices from the K3 constructions").add_argument("e_max", type=int)
    return p


def run(argv: list[str]) -> tuple[int, str]:
    """Return (exit code, output text) without touching stdout."""
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        return EXIT_PARSE, f"error: {exc}\n"
    handlers = {
        "lattice-info": lambda: cmd_lattice_info(args.lattice),
        "classify": lambda: cmd_classify(args.d),
        "assoc": lambda: cmd_assoc(args.d),
        "sweep": lambda: cmd_sweep(args.d_max),
        "examples": cmd_examples,
        "th81": lambda: cmd_th81(args.e_max),
    }
    try:
        data, text = handlers[args.command]()
    except ParseError as exc:
        return EXIT_PARSE, f"error: {exc}\n"
    except DomainError as exc:
        return EXIT_DOMAIN, f"error: {type(exc).__name__}: {exc}\n"
    except InternalVerificationFailed as exc:
        return EXIT_INTERNAL, f"error: {type(exc).__name__}: {exc}\n"
    if args.format == "json":
        out = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        out = text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        return EXIT_OK, ""
    return EXIT_OK, out


def main(argv: list[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    (sys.stdout if code == EXIT_OK else sys.stderr).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
