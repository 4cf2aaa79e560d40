"""Command-line front end.

Subcommands: convert (between partition / abacus / cpp / path JSON),
graph (crystal graph as DOT or JSON), series (partition-function
coefficients), verify (run a named identity suite), enumerate (list
descending or tight configurations by weight).

Exit codes: 2 for unparsable input, 3 for input that parses but fails the
validation required by the requested operation, 1 for a failed verify.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import abacus, crystal, cylindric, kyoto, qseries
from .abacus import AbacusConfig, DominantWeight
from .partitions import Partition


class InputError(Exception):
    exit_code = 2


class ValidationError(Exception):
    exit_code = 3


def parse_weight(text, n):
    """Parse weights written like "2*L0+3*L1+L2"."""
    coeffs = [0] * n
    for term in text.replace(" ", "").split("+"):
        m = re.fullmatch(r"(?:(\d+)\*)?L(\d+)", term)
        if not m:
            raise InputError("cannot parse weight term %r" % term)
        mult = int(m.group(1)) if m.group(1) else 1
        idx = int(m.group(2))
        if idx >= n:
            raise InputError("weight index %d out of range for n=%d" % (idx, n))
        coeffs[idx] += mult
    return DominantWeight(tuple(coeffs))


def _read_json(args):
    raw = sys.stdin.read() if args.input in (None, "-") else open(args.input).read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as err:
        raise InputError("bad JSON input: %s" % err)


def _load_model(model, data, args):
    try:
        if model == "partition":
            return Partition.from_json(data)
        if model == "abacus":
            return AbacusConfig.from_json(data)
        if model == "cpp":
            return cylindric.CylindricPlanePartition.from_json(data)
        if model == "path":
            return kyoto.Path.from_json(data)
    except (KeyError, TypeError, ValueError) as err:
        raise InputError("input does not parse as %s: %s" % (model, err))
    raise InputError("unknown model %r" % model)


def _to_abacus_form(model, obj, args):
    if model == "abacus":
        return obj
    if model == "partition":
        from .partitions import BeadRow, ell_quotient

        rows = [
            BeadRow(c.charge, c.partition) for c in ell_quotient(obj, args.ell)
        ]
        return AbacusConfig(args.n, args.ell, tuple(rows))
    if model == "cpp":
        if not cylindric.is_valid_cpp(obj):
            raise ValidationError("not a valid cylindric plane partition")
        return cylindric.to_abacus(obj)
    if model == "path":
        return kyoto.from_path(obj)
    raise InputError("unknown model %r" % model)


def _from_abacus_form(model, psi, args):
    if model == "abacus":
        return psi.to_json()
    if model == "partition":
        from .partitions import combine_quotient

        if sum(r.charge for r in psi.rows) != 0:
            raise ValidationError("total charge nonzero; no partition image")
        return combine_quotient(psi.rows, psi.ell).to_json()
    if model == "cpp":
        if not abacus.is_descending(psi):
            raise ValidationError("abacus configuration is not descending")
        return cylindric.from_abacus(psi).to_json()
    if model == "path":
        if not (abacus.is_descending(psi) and abacus.is_tight(psi)):
            raise ValidationError("abacus configuration is not tight descending")
        return kyoto.to_path(psi).to_json()
    raise InputError("unknown model %r" % model)


def cmd_convert(args):
    data = _read_json(args)
    obj = _load_model(args.src, data, args)
    psi = _to_abacus_form(args.src, obj, args)
    if args.rotate_colors:
        # relabel which gap carries color 0 by shifting every row
        psi = AbacusConfig(
            psi.n, psi.ell, tuple(r.shifted(args.rotate_colors) for r in psi.rows)
        )
    if args.dst == "cpp" and args.format == "text":
        if not abacus.is_descending(psi):
            raise ValidationError("abacus configuration is not descending")
        sys.stdout.write(cylindric.render_text(cylindric.from_abacus(psi)))
        return 0
    out = _from_abacus_form(args.dst, psi, args)
    json.dump(out, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _generator_config(args):
    if args.weight is None:
        raise InputError("--weight is required")
    w = parse_weight(args.weight, args.n).rotated(args.rotate_colors)
    if w.level != args.ell:
        raise ValidationError(
            "weight level %d does not match --ell %d" % (w.level, args.ell)
        )
    return abacus.highest_weight_config(w, args.n, args.ell)


def cmd_graph(args):
    psi0 = _generator_config(args)
    graph = crystal.crystal_graph(psi0, args.max_degree)
    if args.format == "dot":
        sys.stdout.write(crystal.graph_to_dot(graph))
    else:
        out = {
            "layers": [[c.label() for c in layer] for layer in graph.layers],
            "edges": [[s.label(), i, t.label()] for s, i, t in graph.edges],
        }
        json.dump(out, sys.stdout)
        sys.stdout.write("\n")
    return 0


def cmd_series(args):
    if args.weight is None:
        raise InputError("--weight is required")
    w = parse_weight(args.weight, args.n).rotated(args.rotate_colors)
    if w.level != args.ell:
        raise ValidationError("weight level does not match --ell")
    if args.kind == "Z":
        s = qseries.Z_rep(w, args.n, args.ell, args.nmax)
    elif args.kind == "dimq":
        s = qseries.dimq_crystal(w, args.n, args.ell, args.nmax)
    elif args.kind == "borodin":
        s = qseries.Z_borodin(qseries.boundary_of(w, args.n, args.ell), args.nmax)
    else:
        s = qseries.Z_bruteforce(
            abacus.highest_weight_config(w, args.n, args.ell), args.nmax
        )
    for k, c in enumerate(s.coeffs):
        sys.stdout.write("%d\t%d\n" % (k, c))
    return 0


def cmd_enumerate(args):
    psi0 = _generator_config(args)
    gen = abacus.enumerate_tight if args.tight else abacus.enumerate_descending
    items = sorted(gen(psi0, args.nmax), key=lambda c: (abacus.weight(c), c.key()))
    for cfg in items:
        sys.stdout.write(
            json.dumps({"weight": abacus.weight(cfg), "config": cfg.to_json()}) + "\n"
        )
    return 0


def _verify_gglemma(args):
    w = parse_weight(args.weight, args.n) if args.weight else None
    weights = [w] if w else qseries.level_weights(args.n, args.ell)
    for w_ in weights:
        psi0 = abacus.highest_weight_config(w_, args.n, args.ell)
        for cfg in abacus.enumerate_descending(psi0, args.nmax):
            for i in range(args.n):
                if crystal.f_descending(cfg, i) != crystal.f_abacus(cfg, i):
                    return "f rules disagree at %s color %d" % (cfg.label(), i)
                if crystal.e_descending(cfg, i) != crystal.e_abacus(cfg, i):
                    return "e rules disagree at %s color %d" % (cfg.label(), i)
    return None


def _verify_tk_commute(args):
    weights = qseries.level_weights(args.n, args.ell)
    for w_ in weights:
        psi0 = abacus.highest_weight_config(w_, args.n, args.ell)
        for cfg in abacus.enumerate_descending(psi0, args.nmax):
            kmax = cfg.max_bead_index() + 1
            for i in range(args.n):
                fi = crystal.f_abacus(cfg, i)
                ei = crystal.e_abacus(cfg, i)
                for k in range(1, kmax + 1):
                    tk = abacus.tighten(cfg, k)
                    if tk is None:
                        continue
                    # zero patterns must match on both sides
                    if crystal.f_abacus(tk, i) != (
                        abacus.tighten(fi, k) if fi is not None else None
                    ):
                        return "T_%d and f_%d disagree at %s" % (k, i, cfg.label())
                    if crystal.e_abacus(tk, i) != (
                        abacus.tighten(ei, k) if ei is not None else None
                    ):
                        return "T_%d and e_%d disagree at %s" % (k, i, cfg.label())
    return None


def _verify_bijection(args):
    weights = qseries.level_weights(args.n, args.ell)
    for w_ in weights:
        psi0 = abacus.highest_weight_config(w_, args.n, args.ell)
        for cfg in abacus.enumerate_descending(psi0, args.nmax):
            pi = cylindric.from_abacus(cfg)
            if not cylindric.is_valid_cpp(pi):
                return "image not a cylindric plane partition at %s" % cfg.label()
            if cylindric.to_abacus(pi) != cfg:
                return "roundtrip failed at %s" % cfg.label()
            if cylindric.cpp_weight(pi) != abacus.weight(cfg):
                return "weight mismatch at %s" % cfg.label()
    return None


def _verify_three_way(args):
    for w_ in qseries.level_weights(args.n, args.ell):
        psi0 = abacus.highest_weight_config(w_, args.n, args.ell)
        zr = qseries.Z_rep(w_, args.n, args.ell, args.nmax)
        zb = qseries.Z_borodin(qseries.boundary_of(w_, args.n, args.ell), args.nmax)
        zf = qseries.Z_bruteforce(psi0, args.nmax)
        for k in range(args.nmax + 1):
            if not (zr.coeff(k) == zb.coeff(k) == zf.coeff(k)):
                return "Z mismatch for %s at q^%d: rep=%d borodin=%d brute=%d" % (
                    w_,
                    k,
                    zr.coeff(k),
                    zb.coeff(k),
                    zf.coeff(k),
                )
    return None


def _verify_rank_level(args):
    for w_ in qseries.level_weights(args.n, args.ell):
        if not qseries.check_rank_level(w_, args.n, args.ell, args.nmax):
            return "rank-level duality fails for %s" % w_
    return None


def _verify_level_one(args):
    if not qseries.check_level_one(args.n, args.nmax):
        return "level-one identity fails for n=%d" % args.n
    return None


def _verify_kyoto(args):
    for w_ in qseries.level_weights(args.n, args.ell):
        psi0 = abacus.highest_weight_config(w_, args.n, args.ell)
        for cfg in abacus.enumerate_tight(psi0, args.nmax):
            p = kyoto.to_path(cfg)
            for i in range(args.n):
                img = crystal.f_abacus(cfg, i)
                want = kyoto.to_path(img) if img is not None else None
                if kyoto.f_path(p, i) != want:
                    return "path model disagrees at %s color %d" % (cfg.label(), i)
    return None


VERIFIERS = {
    "gglemma": _verify_gglemma,
    "tk-commute": _verify_tk_commute,
    "bijection": _verify_bijection,
    "three-way-Z": _verify_three_way,
    "rank-level": _verify_rank_level,
    "level-one": _verify_level_one,
    "kyoto": _verify_kyoto,
}


def cmd_verify(args):
    failure = VERIFIERS[args.which](args)
    if failure is None:
        sys.stdout.write("ok: %s\n" % args.which)
        return 0
    sys.stdout.write("FAIL: %s: %s\n" % (args.which, failure))
    return 1


def build_parser():
    top = argparse.ArgumentParser(prog="slncrystals")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, weight=True):
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--ell", type=int, default=2)
        if weight:
            p.add_argument("--weight", help='e.g. "2*L0+3*L1+L2"')
        p.add_argument("--rotate-colors", type=int, default=0)

    p = sub.add_parser("convert", help="convert between model JSON encodings")
    p.add_argument("src", choices=["partition", "abacus", "cpp", "path"])
    p.add_argument("dst", choices=["partition", "abacus", "cpp", "path"])
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("graph", help="graded crystal graph")
    common(p)
    p.add_argument("--max-degree", type=int, default=20)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("series", help="partition function coefficients")
    common(p)
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--kind", choices=["Z", "dimq", "borodin", "brute"], default="Z")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("enumerate", help="descending configurations by weight")
    common(p)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--tight", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("which", choices=sorted(VERIFIERS))
    common(p)
    p.add_argument("--nmax", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValidationError) as err:
        sys.stderr.write("error: %s\n" % err)
        return err.exit_code


if __name__ == "__main__":
    sys.exit(main())
