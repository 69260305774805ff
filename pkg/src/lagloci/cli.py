"""Command-line front end.

Inputs are JSON files (``-`` reads stdin, ``fixture:NAME`` reads a shipped
fixture).  Output goes to stdout as sorted, indented JSON (``--out json``,
the default) or as ``key: value`` lines; in JSON mode the wall time is
written to stderr so that stdout is byte-identical across runs.

Exit codes: 0 success, 1 a check or verification failed, 2 bad input.
"""

import argparse
import json
import sys
import time

from . import jsonio
from .jsonio import (InputError, dumps, ideal_from_json, matrix_from_json, matrix_to_json,
                     poly_from_json, poly_to_json)
from .rings import GF, QQ, PolyRing

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class CheckFailed(Exception):
    """Carries a result payload whose check did not pass."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


# -- input helpers ---------------------------------------------------------------


def parse_field(text):
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            return GF(int(text[3:]))
        except ValueError as exc:
            raise InputError(f"bad field {text!r}: {exc}") from exc
    raise InputError(f"unknown field {text!r}; use Q or Fp:<p>")


def default_ring(args):
    K = parse_field(args.field)
    names = [v for v in (args.vars or "").split(",") if v]
    return PolyRing(K, names) if names else K


def read_input(path):
    if path is None:
        raise InputError("an input file is required")
    try:
        if path == "-":
            return json.load(sys.stdin)
        if path.startswith("fixture:"):
            from .fixtures import load_fixture
            return load_fixture(path[len("fixture:"):])
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise InputError(str(exc)) from exc
    except KeyError as exc:
        raise InputError(str(exc)) from exc


def ring_of_input(args, data):
    return jsonio.read_ring(data, default_ring(args))


def need(data, key):
    if key not in data:
        raise InputError(f"input is missing {key!r}")
    return data[key]


def read_matrix(args, data, key="matrix"):
    R = ring_of_input(args, data)
    return matrix_from_json(R, need(data, key)), R


def parse_point(text, R):
    if text is None:
        return None
    vals = [v for v in text.split(",") if v]
    if len(vals) != R.nvars:
        raise InputError(f"--at needs {R.nvars} coordinates")
    return tuple(R.field(v) for v in vals)


def vector_json(v):
    return [poly_to_json(x) for x in v]


# -- pfaffian --------------------------------------------------------------------


def cmd_pfaffian(args):
    from .pfaffian import pfaffian, sub_pfaffians, submaximal_pfaffian_vector
    data = read_input(args.input)
    A, R = read_matrix(args, data)
    if args.action == "compute":
        return {"pfaffian": poly_to_json(pfaffian(A, R))}
    if args.action == "subs":
        if args.order is None:
            raise InputError("subs needs --order")
        gens = sub_pfaffians(A, args.order, R)
        return {"order": args.order, "count": len(gens), "gens": vector_json(gens)}
    v = submaximal_pfaffian_vector(A, R)
    return {"vector": vector_json(v), "annihilated": all(not x for x in A @ v)}


# -- pair ------------------------------------------------------------------------


def _pair(args, data):
    return jsonio.pair_from_json(data, ring_of_input(args, data))


def cmd_pair(args):
    from .pairs import (common_complement, complement_transform, homotopy_involution,
                        intersection, localize_alternating)
    data = read_input(args.input)
    if args.action == "transform":
        R = ring_of_input(args, data)
        zeta = matrix_from_json(R, need(data, "zeta"))
        h = matrix_from_json(R, need(data, "h"))
        z2, h2 = homotopy_involution(zeta, h)
        return {"transformed": matrix_to_json(complement_transform(zeta, h)),
                "involution": {"zeta": matrix_to_json(z2), "h": matrix_to_json(h2)}}
    P = _pair(args, data)
    if args.action == "intersect":
        at = parse_point(args.at, P.ring) if hasattr(P.ring, "nvars") else None
        dim, basis = intersection(P, at)
        return {"dim": dim, "basis": matrix_to_json(basis)}
    if args.action == "complement":
        w = common_complement(P)
        return {"complement": jsonio.lagsub_to_json(w.M), "rank_E": w.rank_E,
                "rank_F": w.rank_F, "valid": w.valid}
    la = localize_alternating(P)
    return {"zeta_poly": matrix_to_json(la.zeta_poly), "iota": matrix_to_json(la.iota),
            "zeta": matrix_to_json(la.zeta),
            "inverted": [poly_to_json(d) for d in la.inverted], "padded": la.padded}


# -- degeneracy ------------------------------------------------------------------


def cmd_degeneracy(args):
    from .degeneracy import (check_complement_independence, check_vanishing, degeneracy_ideal,
                             symmetric_degeneracy_ideal)
    from .ideals import ideal_codim
    from .pairs import symmetric_graph_pair
    from .quadform import LagSub
    data = read_input(args.input)
    if args.m is None:
        raise InputError("--m is required")
    if args.action == "symmetric":
        S, R = read_matrix(args, data)
        Z = symmetric_degeneracy_ideal(symmetric_graph_pair(S, R), args.m)
        return {"m": args.m, "ideal": Z.to_json()}
    P = _pair(args, data)
    if args.action == "check-independence":
        M1 = LagSub(matrix_from_json(P.ring, need(data, "M1")), P.ambient)
        M2 = LagSub(matrix_from_json(P.ring, need(data, "M2")), P.ambient)
        same = check_complement_independence(P, args.m, M1, M2)
        out = {"m": args.m, "equal": same}
        if not same:
            raise CheckFailed(out)
        return out
    res = degeneracy_ideal(P, args.m)
    out = {"m": args.m, "order": res.order, "padded": res.padded, "ideal": res.ideal.to_json()}
    if not res.ideal.is_zero():
        codim, unit = ideal_codim(res.ideal, with_flag=True)
        out["codim"] = None if unit else codim
    if res.kernel_line is not None:
        out["kernel_line"] = vector_json(res.kernel_line)
    if args.samples:
        checked, bad = check_vanishing(P, res, args.samples, args.seed)
        out["samples"] = {"checked": checked, "mismatches": len(bad)}
        if bad:
            raise CheckFailed(out)
    return out


# -- resolve ---------------------------------------------------------------------


def _psi_phi(args, data):
    R = ring_of_input(args, data)
    return matrix_from_json(R, need(data, "psi")), matrix_from_json(R, need(data, "phi")), R


def cmd_resolve(args):
    from . import resolutions as res
    if args.action == "parity":
        for k in ("n", "ell", "chi"):
            if getattr(args, k) is None:
                raise InputError(f"parity needs --{k}")
        fires = res.parity_obstruction_codim1(args.n, args.ell, args.chi, args.kind)
        return {"n": args.n, "ell": args.ell, "chi": args.chi, "kind": args.kind,
                "obstructed": fires}
    data = read_input(args.input)
    if args.action == "euler":
        vt = [tuple(x) for x in need(data, "virtual_twists")]
        n = args.n if args.n is not None else need(data, "n")
        shift = args.shift if args.shift is not None else data.get("shift", 0)
        return {"n": n, "shift": shift, "chi": res.euler_characteristic(vt, n, shift)}
    if args.action == "be":
        A, _ = read_matrix(args, data)
        C = res.be_complex(A)
        return {"complex": C.to_json(), "exact": res.check_exactness(C)}
    psi, phi, R = _psi_phi(args, data)
    if args.action == "dual":
        S = res.dual_diagram(psi, phi, data.get("twists"), seed=args.seed)
        return S.to_json()
    if args.action == "symmetric":
        S = res.symmetric_codim1_resolution(psi, phi, data.get("twists"), seed=args.seed)
        return S.to_json()
    if args.action == "symmetrize":
        h = matrix_from_json(R, need(data, "h"))
        return {"mu": matrix_to_json(res.homotopy_symmetrize(psi, phi, h))}
    if args.action == "standard-form":
        F = res.standard_local_form(psi, phi)
        return {k: matrix_to_json(getattr(F, k)) for k in ("P", "Q", "beta", "gamma")}
    m = args.m if args.m is not None else 3
    I, info = res.colon_equations(psi, phi, m, details=True)
    return {"m": m, "ideal": I.to_json(), "f": poly_to_json(info["f"])}


# -- ideal -----------------------------------------------------------------------


def cmd_ideal(args):
    from .ideals import ideal_codim, ideal_colon, ideal_equal
    data = read_input(args.input)
    R = ring_of_input(args, data)
    if args.action == "equal":
        I, J = ideal_from_json(R, need(data, "I")), ideal_from_json(R, need(data, "J"))
        return {"equal": ideal_equal(I, J)}
    I = ideal_from_json(R, need(data, "ideal"))
    if args.action == "member":
        f = poly_from_json(I.ring, need(data, "poly"))
        return {"member": I.contains(f)}
    if args.action == "colon":
        f = poly_from_json(I.ring, need(data, "f"))
        return {"ideal": ideal_colon(I, f).to_json()}
    codim, unit = ideal_codim(I, with_flag=True)
    return {"codim": codim, "unit": unit, "groebner": [poly_to_json(g) for g in I.groebner()]}


# -- generate / verify -------------------------------------------------------------


def cmd_generate(args):
    from .generate import generate_instance
    nvars = len([v for v in (args.vars or "").split(",") if v]) if args.vars else 3
    parse_field(args.field)
    return generate_instance(args.kind, args.size, args.degree, args.field, args.seed, nvars)


def cmd_verify(args):
    from .verify import LEMMAS, run_verification
    names = sorted(LEMMAS) if args.lemma == "all" else [args.lemma]
    reports = [run_verification(n, args.count, args.seed, args.jobs) for n in names]
    out = reports[0].to_json() if len(reports) == 1 else {"reports": [r.to_json() for r in reports]}
    if not all(r.ok for r in reports):
        raise CheckFailed(out)
    return out


def cmd_replay(path):
    from .verify import replay
    data = read_input(path)
    dumps_ = data.get("failures", [data]) if isinstance(data, dict) else data
    reports = [replay(d) for d in dumps_]
    out = {"replayed": [r.to_json() for r in reports]}
    if not all(r.ok for r in reports):
        raise CheckFailed(out)
    return out


# -- parser ----------------------------------------------------------------------


def _global_flags(p, suppress=False):
    # accepted before or after the subcommand; the top-level parser holds defaults
    kw = (lambda d: {"default": argparse.SUPPRESS}) if suppress else (lambda d: {"default": d})
    p.add_argument("--field", help="Q or Fp:<p> (default Q)", **kw("Q"))
    p.add_argument("--vars", help="comma-separated variable names", **kw(None))
    p.add_argument("--seed", type=int, **kw(0))
    p.add_argument("--out", choices=("json", "text"), **kw("json"))


def build_parser():
    p = argparse.ArgumentParser(prog="lagloci", description=__doc__.splitlines()[0])
    _global_flags(p)
    p.add_argument("--replay", metavar="DUMP", default=None,
                   help="re-run the failure dump(s) in a verification report")
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", parser_class=lambda **kw: argparse.ArgumentParser(
        parents=[common], **kw))

    q = sub.add_parser("pfaffian", help="Pfaffians of an alternating matrix")
    q.add_argument("action", choices=("compute", "subs", "kernel"))
    q.add_argument("input")
    q.add_argument("--order", type=int)
    q.set_defaults(func=cmd_pfaffian)

    q = sub.add_parser("pair", help="Lagrangian pairs")
    q.add_argument("action", choices=("intersect", "complement", "alternate", "transform"))
    q.add_argument("input")
    q.add_argument("--at", help="comma-separated point (default: origin)")
    q.set_defaults(func=cmd_pair)

    q = sub.add_parser("degeneracy", help="degeneracy loci")
    q.add_argument("action", choices=("ideal", "check-independence", "symmetric"))
    q.add_argument("input")
    q.add_argument("--m", type=int)
    q.add_argument("--samples", type=int, default=0)
    q.set_defaults(func=cmd_degeneracy)

    q = sub.add_parser("resolve", help="resolutions and local equations")
    q.add_argument("action", choices=("be", "dual", "symmetric", "symmetrize", "standard-form",
                                      "colon", "euler", "parity"))
    q.add_argument("input", nargs="?")
    q.add_argument("--m", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--shift", type=int)
    q.add_argument("--ell", type=int)
    q.add_argument("--chi", type=int)
    q.add_argument("--kind", choices=("symmetric", "skew"), default="symmetric")
    q.set_defaults(func=cmd_resolve)

    q = sub.add_parser("ideal", help="ideal operations")
    q.add_argument("action", choices=("member", "equal", "colon", "codim"))
    q.add_argument("input")
    q.set_defaults(func=cmd_ideal)

    q = sub.add_parser("generate", help="seeded random instances")
    q.add_argument("--kind", required=True)
    q.add_argument("--size", type=int, default=3)
    q.add_argument("--degree", type=int, default=1)
    q.set_defaults(func=cmd_generate)

    q = sub.add_parser("verify", help="run a lemma's verification suite")
    q.add_argument("lemma", help="lemma id or 'all'")
    q.add_argument("--count", type=int)
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_verify)
    return p


def _is_poly(obj):
    return isinstance(obj, list) and all(isinstance(t, dict) and set(t) == {"c", "e"}
                                         for t in obj)


def _poly_str(terms):
    # variables are printed positionally as x1, x2, ...
    if not terms:
        return "0"
    out = []
    for t in terms:
        mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "")
                        for i, k in enumerate(t["e"]) if k)
        c = str(t["c"])
        if mono:
            c = "" if c == "1" else "-" if c == "-1" else c + "*"
        out.append(c + mono)
    return " + ".join(out).replace("+ -", "- ")


def _entry_str(e):
    if isinstance(e, dict) and set(e) == {"num", "den"}:
        return f"({_poly_str(e['num'])})/({_poly_str(e['den'])})"
    return _poly_str(e) if _is_poly(e) else str(e)


def _text(obj, indent=""):
    lines = []
    if _is_poly(obj) and obj:
        return [f"{indent}{_poly_str(obj)}"]
    if isinstance(obj, dict) and set(obj) == {"num", "den"} and _is_poly(obj["num"]):
        return [f"{indent}({_poly_str(obj['num'])}) / ({_poly_str(obj['den'])})"]
    if isinstance(obj, dict) and {"rows", "cols", "entries"} <= set(obj):
        return [f"{indent}[" + ", ".join(_entry_str(e) for e in row) + "]"
                for row in obj["entries"]] or [f"{indent}[]"]
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if v and _is_poly(v):
                lines.append(f"{indent}{k}: {_poly_str(v)}")
            elif isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
                lines.append(f"{indent}{k}: [" + ", ".join(map(str, v)) + "]")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.extend(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) or _is_poly(v) for v in obj):
            return [f"{indent}[" + ", ".join(_entry_str(v) for v in obj) + "]"]
        for i, v in enumerate(obj):
            lines.append(f"{indent}#{i}:")
            lines.extend(_text(v, indent + "  "))
    else:
        lines.append(f"{indent}{obj}")
    return lines


def emit(payload, args, elapsed):
    if args.out == "json":
        sys.stdout.write(dumps(payload) + "\n")
        sys.stderr.write(f"wall time: {elapsed:.3f}s\n")
    else:
        sys.stdout.write("\n".join(_text(payload)) + "\n")
        sys.stdout.write(f"wall time: {elapsed:.3f}s\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None and args.replay is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        payload = cmd_replay(args.replay) if args.replay else args.func(args)
    except CheckFailed as exc:
        payload, code = exc.payload, EXIT_FAIL
    except (InputError, ValueError, KeyError, TypeError, ArithmeticError) as exc:
        # domain errors (not alternating, wrong grade, ...) are input errors too
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    emit(payload, args, time.perf_counter() - t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
