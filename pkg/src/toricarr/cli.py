"""Command-line interface.

Exit codes: 0 success/PASS, 1 cross-check mismatch, 2 invalid input,
3 precondition failure (non-essential, non-generic, wrong dimension).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrangement import ArrangementError, NotEssential, essentialize, rank
from .cells import cellulate, relative_homology
from .fileio import ParseError, format_rational, parse_arrangement, parse_local_system
from .layers import layers, tangential_arrangement
from .local_systems import (NotGeneric, WrongDimension, is_generic, predict_group_ring,
                            predict_l2, predict_twisted, twisted_cohomology_1d)
from .render import render_svg
from .report import METHODS, compute_betas, layer_to_obj, push_local_system, verify

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise _InputError(f"cannot read {path}: {e.strerror}") from None


def _load(args):
    arr = parse_arrangement(_read(args.arrangement))
    ls_path = getattr(args, "local_system", None)
    ls = parse_local_system(_read(ls_path), arr) if ls_path else None
    note = None
    if getattr(args, "essentialize", False) and rank(arr) < arr.dimension:
        arr, S = essentialize(arr)
        note = {"essentialized": True, "coordinate_map": S}
        if ls is not None:
            ls = push_local_system(ls, S)
    return arr, ls, note


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


def _points(p):
    return "(" + ", ".join(format_rational(c) for c in p) + ")"


def cmd_validate(args):
    arr, _, _ = _load(args)
    r = rank(arr)
    obj = {"valid": True, "dimension": arr.dimension, "hypertori": len(arr.hypertori),
           "rank": r, "essential": r == arr.dimension}
    _emit(args, obj, f"valid: n={arr.dimension}, {len(arr.hypertori)} hypertori, rank {r}"
                     + (" (essential)" if r == arr.dimension else " (not essential)"))
    return EXIT_OK


def cmd_layers(args):
    arr, _, note = _load(args)
    poset = layers(arr)
    rows = []
    lines = []
    for i, g in enumerate(poset.layers):
        entry = layer_to_obj(g)
        entry["index"] = i
        if i > 0:
            entry["tangential_rank"] = tangential_arrangement(arr, g, poset).rank
        rows.append(entry)
        where = "T" if i == 0 else f"through {_points(g.point())}"
        lines.append(f"[{i}] dim {g.dimension}  {where}  hypertori {list(g.supporting_hypertori)}")
    obj = {"layers": rows, "covers": [list(c) for c in poset.covers], "note": note}
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_beta(args):
    arr, _, note = _load(args)
    methods = METHODS if args.method == "all" else (args.method,)
    betas, _ = compute_betas(arr, methods)
    agree = len(set(betas.values())) == 1
    obj = {"beta_by_method": betas, "agree": agree, "note": note}
    _emit(args, obj, "\n".join(f"{m}: {b}" for m, b in betas.items())
          + ("" if agree else "\nMISMATCH"))
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_homology(args):
    arr, _, note = _load(args)
    h = relative_homology(arr)
    obj = {"homology_table": h.as_dict(), "concentrated": h.concentrated(), "note": note}
    _emit(args, obj, "\n".join(f"H_{d}(T, Sigma) = Z^{r}" + (f" + torsion {list(t)}" if t else "")
                               for d, (r, t) in enumerate(zip(h.ranks, h.torsion))))
    return EXIT_OK


def cmd_chambers(args):
    arr, _, note = _load(args)
    cx = cellulate(arr)
    reps = [c.point for c in cx.chamber_cells]
    obj = {"count": len(reps), "representatives": [[format_rational(c) for c in p] for p in reps],
           "f_vector": cx.f_vector, "note": note}
    _emit(args, obj, f"{len(reps)} chambers\n" + "\n".join(_points(p) for p in reps)
          + f"\nf-vector {cx.f_vector}")
    return EXIT_OK


def cmd_generic(args):
    arr, ls, _ = _load(args)
    ok, wit = is_generic(ls, arr)
    obj = {"generic": ok, "witnesses": [layer_to_obj(g) for g in wit]}
    text = "generic" if ok else "not generic; lambda = 1 on:\n" + "\n".join(
        f"  dim {g.dimension} layer through {_points(g.point())}, hypertori {list(g.supporting_hypertori)}"
        for g in wit)
    _emit(args, obj, text)
    return EXIT_OK


def cmd_predict(args):
    arr, ls, note = _load(args)
    preds = [predict_l2(arr), predict_group_ring(arr)]
    if ls is not None:
        preds.insert(0, predict_twisted(arr, ls))
    obj = {"predictions": [p.as_dict() for p in preds], "note": note}
    _emit(args, obj, "\n".join(f"{p.theorem}: {list(p.values)}" for p in preds))
    return EXIT_OK


def cmd_oracle1d(args):
    arr, ls, _ = _load(args)
    h0, h1 = twisted_cohomology_1d(arr, ls)
    _emit(args, {"h0": h0, "h1": h1}, f"dim H^0 = {h0}, dim H^1 = {h1}")
    return EXIT_OK


def cmd_verify(args):
    arr = parse_arrangement(_read(args.arrangement))
    ls = parse_local_system(_read(args.local_system), arr) if args.local_system else None
    rep = verify(arr, ls, essentialize_input=args.essentialize)
    _emit(args, rep.as_dict(), rep.summary())
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_render(args):
    arr, _, _ = _load(args)
    svg = render_svg(arr)
    if args.output:
        Path(args.output).write_text(svg)
        _emit(args, {"written": args.output}, f"wrote {args.output}")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricarr",
                                     description="Exact analysis of complexified toric arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, ls=None, ess=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("arrangement", help="arrangement JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if ess:
            p.add_argument("--essentialize", action="store_true",
                           help="quotient a non-essential arrangement by its kernel torus first")
        if ls == "required":
            p.add_argument("--local-system", required=True, help="local system JSON file")
        elif ls == "optional":
            p.add_argument("--local-system", default=None, help="local system JSON file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "parse and validate an arrangement", ess=False)
    add("layers", cmd_layers, "list the poset of layers")
    p = add("beta", cmd_beta, "compute beta")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    add("homology", cmd_homology, "integral homology of (T, Sigma)")
    add("chambers", cmd_chambers, "chambers of the compact torus")
    add("generic", cmd_generic, "decide genericity of a local system", ls="required")
    add("predict", cmd_predict, "predicted cohomology of the complement", ls="optional")
    add("oracle1d", cmd_oracle1d, "twisted cohomology for n = 1 by direct computation", ls="required")
    add("verify", cmd_verify, "run every cross-check", ls="optional")
    p = add("render", cmd_render, "SVG of the chamber tiling (n = 2)")
    p.add_argument("-o", "--output", default=None, help="output SVG path (default: stdout)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ArrangementError, _InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except NotGeneric as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        for g in e.witnesses:
            print(f"  witness: dim {g.dimension} layer, hypertori {list(g.supporting_hypertori)}",
                  file=sys.stderr)
        return EXIT_PRECONDITION
    except (NotEssential, WrongDimension) as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
