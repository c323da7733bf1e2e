"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input error (unreadable or
malformed file, bad labels), 3 internal consistency failure.  All output
is deterministic for identical invocations, seeds included.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census as census_mod
from . import model, saturation, surface, transition, yamada
from .model import CogError, CogParseError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    p = _Parser(prog="cogpoly", description="cog invariants toolbox")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--json", action="store_true", help="JSON output")
        return sp

    sp = add("sat", help="saturation polynomial of a cog")
    sp.add_argument("file")
    sp.add_argument("--method", choices=("recursive", "statesum", "cog"),
                    default="recursive")
    sp.add_argument("--D", default=None, help="edges to delete, comma-separated")
    sp.add_argument("--X", default=None, help="edges to extract, comma-separated")

    sp = add("trans", help="transition polynomial of the cog's gec")
    sp.add_argument("file")
    sp.add_argument("--method", choices=("recursive", "statesum"),
                    default="recursive")
    sp.add_argument("--t", type=int, default=None, help="evaluate at t = INT")
    sp.add_argument("--kval", action="store_true",
                    help="compute the k-valuation sum at k = --t instead")

    sp = add("toptrans", help="topological transition polynomial of an .srs")
    sp.add_argument("file")

    sp = add("yamada", help="Yamada-derived invariants of a cog")
    sp.add_argument("file")
    sp.add_argument("--value", choices=("Y", "Rm1", "R"), default="Y")
    sp.add_argument("--drawings", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("genus", help="genus range of a connected cog")
    sp.add_argument("file")
    sp.add_argument("--kind", choices=("orientable", "euler", "nonorientable"),
                    required=True)

    sp = add("faces", help="boundary walks of an .srs embedding")
    sp.add_argument("file")

    sp = add("enum", help="enumerate cogs up to isomorphism")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--allow-isolated", action="store_true")
    sp.add_argument("--invariant", choices=("sat", "trans", "yamadaY"),
                    default=None)

    sp = add("iso", help="test two cog files for isomorphism")
    sp.add_argument("file1")
    sp.add_argument("file2")

    sp = add("convert", help="convert between cog text and gec description")
    sp.add_argument("file")
    sp.add_argument("--to", choices=("gec", "cog"), required=True, dest="to")

    add("selfcheck", help="run the built-in property suites")
    return p


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CogError("cannot read %s: %s" % (path, exc)) from exc


def _load_cog(path):
    text = _read(path)
    if str(path).endswith(".srs"):
        return model.underlying_cog(model.parse_srs(text))
    return model.parse_cog(text)


def _load_srs(path):
    if not str(path).endswith(".srs"):
        raise CogError("%s: expected an .srs file" % path)
    return model.parse_srs(_read(path))


def _split_labels(text):
    if text is None:
        return []
    return [t for t in text.replace(",", " ").split() if t]


def _emit_poly(p, as_json, out):
    if as_json:
        json.dump({"polynomial": p.to_json(), "string": p.to_string()}, out)
        out.write("\n")
    else:
        print(p.to_string(), file=out)


def _cmd_sat(args, out):
    c = _load_cog(args.file)
    if args.D is not None or args.X is not None:
        p = saturation.saturation_DX(c, _split_labels(args.D), _split_labels(args.X))
    elif args.method == "cog":
        p = saturation.saturation_cog(c)
    elif args.method == "statesum":
        p = saturation.saturation_statesum(model.cog_to_gec(c))
    else:
        p = saturation.saturation_recursive(model.cog_to_gec(c))
    _emit_poly(p, args.json, out)
    return 0


def _cmd_trans(args, out):
    c = _load_cog(args.file)
    g = model.cog_to_gec(c)
    if args.kval:
        if args.t is None or args.t < 1:
            raise _UsageError("--kval needs --t INT with INT >= 1")
        p = transition.k_valuation_sum(g, args.t)
    else:
        if args.method == "statesum":
            p = transition.transition_statesum(g)
        else:
            p = transition.transition_recursive(g)
        if args.t is not None:
            p = p.substitute_int("t", args.t)
    _emit_poly(p, args.json, out)
    return 0


def _cmd_toptrans(args, out):
    s = _load_srs(args.file)
    _emit_poly(transition.topological_transition(s), args.json, out)
    return 0


def _cmd_yamada(args, out):
    c = _load_cog(args.file)
    if args.value == "Y":
        v = yamada.invariant_Y(c, drawings=max(1, args.drawings), seed=args.seed)
        result = {"value": v}
        text = str(v)
    elif args.value == "Rm1":
        v = yamada.invariant_Rm1(c, seed=args.seed)
        result = {"value": v}
        text = str(v)
    else:
        p = yamada.yamada_R(yamada.draw(c, seed=args.seed))
        result = {"polynomial": p.to_json(), "string": p.to_string()}
        text = p.to_string()
    if args.json:
        json.dump(result, out)
        out.write("\n")
    else:
        print(text, file=out)
    return 0


def _cmd_genus(args, out):
    c = _load_cog(args.file)
    rng = surface.genus_range(c, args.kind)
    if args.json:
        json.dump({"kind": args.kind, "range": rng}, out)
        out.write("\n")
    else:
        print(" ".join(str(g) for g in rng), file=out)
    return 0


def _walk_tokens(s, walk):
    labels = s.rotation.edge_labels
    return ["%s%s" % (labels[h // 2], "+" if m > 0 else "-") for h, m in walk]


def _cmd_faces(args, out):
    s = _load_srs(args.file)
    trace = surface.trace_boundaries(s)
    if args.json:
        json.dump({"b": trace.b,
                   "walks": [_walk_tokens(s, w) for w in trace.boundary_walks]},
                  out)
        out.write("\n")
    else:
        print("b: %d" % trace.b, file=out)
        for walk in trace.boundary_walks:
            if walk:
                print("walk: " + " ".join(_walk_tokens(s, walk)), file=out)
            else:
                print("walk: (isolated vertex)", file=out)
    return 0


def _cmd_enum(args, out):
    if args.invariant:
        rows = census_mod.census_report(
            args.edges, args.invariant,
            connected_only=args.connected,
            no_isolated=not args.allow_isolated)
        if args.json:
            json.dump({"edges": args.edges, "count": len(rows),
                       "rows": [{"cog": f, "value": v, "group": g}
                                for f, v, g in rows]}, out)
            out.write("\n")
        else:
            for form, value, group in rows:
                print("%s\tgroup %d\t%s" % (form, group, value), file=out)
    else:
        cogs = census_mod.enumerate_cogs(
            args.edges, connected_only=args.connected,
            no_isolated=not args.allow_isolated)
        if args.json:
            json.dump({"edges": args.edges, "count": len(cogs),
                       "cogs": [model.canonical_form(c) for c in cogs]}, out)
            out.write("\n")
        else:
            for c in cogs:
                print(model.canonical_form(c), file=out)
    return 0


def _cmd_iso(args, out):
    a = _load_cog(args.file1)
    b = _load_cog(args.file2)
    same = model.is_isomorphic(a, b)
    if args.json:
        json.dump({"isomorphic": same}, out)
        out.write("\n")
    else:
        print("isomorphic" if same else "not isomorphic", file=out)
    return 0


def _cmd_convert(args, out):
    if args.to == "cog":
        c = _load_cog(args.file)
        if args.json:
            json.dump({"cog": model.format_cog(c)}, out)
            out.write("\n")
        else:
            print(model.format_cog(c), file=out)
        return 0
    c = _load_cog(args.file)
    g = model.cog_to_gec(c)
    cycles = model._v_cycles(g)
    if args.json:
        json.dump({"vcycles": cycles,
                   "e_edges": [list(e) for e in g.e_edges],
                   "freeloops": g.free_loops}, out)
        out.write("\n")
    else:
        for cycle in cycles:
            print("vcycle: " + " ".join(str(v) for v in cycle), file=out)
        for u, v in g.e_edges:
            print("e: %d %d" % (u, v), file=out)
        print("freeloops: %d" % g.free_loops, file=out)
    return 0


def _cmd_selfcheck(args, out):
    from .selfcheck import run_selfcheck
    ok = run_selfcheck(lambda line: print(line, file=out))
    return 0 if ok else 3


_COMMANDS = {
    "sat": _cmd_sat,
    "trans": _cmd_trans,
    "toptrans": _cmd_toptrans,
    "yamada": _cmd_yamada,
    "genus": _cmd_genus,
    "faces": _cmd_faces,
    "enum": _cmd_enum,
    "iso": _cmd_iso,
    "convert": _cmd_convert,
    "selfcheck": _cmd_selfcheck,
}


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=err)
        return 1
    except CogParseError as exc:
        print("input error: %s" % exc, file=err)
        return 2
    except CogError as exc:
        print("input error: %s" % exc, file=err)
        return 2
    except yamada.InvariantMismatchError as exc:
        print("internal consistency failure: %s" % exc, file=err)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
