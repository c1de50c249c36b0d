"""Command-line front end.

JSON in, JSON out, integers as decimal strings throughout so nothing is
ever rounded.  Reports embed the tool version and the seed; identical
invocations with identical seeds produce byte-identical output.  Exit
codes: 0 ok, 1 verification failure, 2 usage or IO error.
"""

import argparse
import json
import os
import random
import sys
import tempfile

from . import __version__
from .core import (
    SuperAlgebraError, algebra_from_json_dict, algebra_to_json_dict, center,
    centralizer, killing_form, tables_equal, verify_superalgebra,
)
from .families import FamilySpec, build, square_identity_samples
from .decomp import DecompositionError, structure_report
from .unitar import necessary_conditions_report
from .fock import (
    check_car, check_unitary_representation, number_spectrum,
    spin_representation, tilde_tangent_representation,
)

OK, FAIL, USAGE = 0, 1, 2


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _atomic_write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".superdecomp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _emit(obj, out_path):
    text = _dumps(obj)
    if out_path:
        _atomic_write(out_path, text)
    else:
        sys.stdout.write(text)


def _parse_params(raw):
    out = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        out.append(int(tok) if tok.lstrip("-").isdigit() else tok)
    return tuple(out)


def _load_algebra(path):
    with open(path) as fh:
        obj = json.load(fh)
    return algebra_from_json_dict(obj), obj


def _seed_of(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SUPERDECOMP_SEED")
    if env is not None:
        return int(env)
    return 0


def _parse_ktag(raw):
    for kind in ("su", "so", "sp"):
        if raw.startswith(kind) and raw[len(kind):].isdigit():
            return kind, int(raw[len(kind):])
    raise ValueError("k must look like su2, so3 or sp1")


def cmd_construct(args):
    try:
        spec = FamilySpec(args.family, _parse_params(args.params))
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE
    alg = build(spec)
    viol = verify_superalgebra(alg)
    if viol is not None:
        print("error: constructor output failed verification: %r" % viol,
              file=sys.stderr)
        return FAIL
    name = args.name or spec.name()
    _atomic_write(args.out, _dumps(algebra_to_json_dict(alg, name)))
    print("%s written to %s (dims %d|%d)" % (name, args.out, alg.d0, alg.d1))
    return OK


def cmd_check(args):
    try:
        alg, raw = _load_algebra(args.file)
    except (OSError, ValueError, KeyError) as exc:
        print("error: cannot read algebra file: %s" % exc, file=sys.stderr)
        return USAGE
    base = {"version": __version__, "check": args.what, "name": raw.get("name", "")}
    if args.what == "jacobi":
        viol = verify_superalgebra(alg)
        if viol is None:
            _emit({**base, "verdict": "ok"}, args.out)
            return OK
        _emit({**base, "verdict": "violation", "kind": viol.kind,
               "indices": [str(i) for i in viol.indices]}, args.out)
        return FAIL
    if args.what == "killing":
        _, rank = killing_form(alg)
        _emit({**base, "rank": str(rank), "dim": str(alg.dim)}, args.out)
        return OK
    if args.what == "center":
        z = center(alg)
        z0 = centralizer(alg, alg.even_subspace(), alg.even_subspace())
        _emit({**base, "dim_z": str(z.dim), "dim_z0": str(z0.dim)}, args.out)
        return OK
    # eq-square: rebuild the named constructor to recover the matrices
    name = raw.get("name", "")
    if not name.startswith("u("):
        print("error: eq-square needs a file built from a u(p|q) constructor",
              file=sys.stderr)
        return USAGE
    try:
        p, q = name[2:-1].split("|")
        spec = FamilySpec("u", (int(p), int(q)))
    except ValueError:
        print("error: unrecognised u-family name %r" % name, file=sys.stderr)
        return USAGE
    fresh = build(spec)
    if not tables_equal(alg, fresh):
        print("error: file constants do not match the named constructor",
              file=sys.stderr)
        return FAIL
    rng = random.Random(_seed_of(args))
    try:
        ok = square_identity_samples(fresh, args.samples, rng)
    except SuperAlgebraError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL
    _emit({**base, "seed": str(_seed_of(args)), "samples": str(args.samples),
           "satisfied": str(ok)}, args.out)
    return OK


def cmd_decompose(args):
    try:
        alg, raw = _load_algebra(args.file)
    except (OSError, ValueError, KeyError) as exc:
        print("error: cannot read algebra file: %s" % exc, file=sys.stderr)
        return USAGE
    seed = _seed_of(args)
    try:
        rep = structure_report(alg, seed=seed)
    except DecompositionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL
    obj = rep.to_json_dict()
    obj["name"] = raw.get("name", "")
    _emit(obj, args.report)
    if args.report:
        print("report written to %s (|Js|=%d |Ja|=%d kernel=%d)"
              % (args.report, len(rep.classification.js),
                 len(rep.classification.ja), rep.kernel_dim))
    return OK


def cmd_unitarity(args):
    try:
        alg, raw = _load_algebra(args.file)
    except (OSError, ValueError, KeyError) as exc:
        print("error: cannot read algebra file: %s" % exc, file=sys.stderr)
        return USAGE
    rep = necessary_conditions_report(alg, seed=_seed_of(args))
    obj = rep.to_json_dict()
    obj["name"] = raw.get("name", "")
    _emit(obj, args.out)
    return OK


def cmd_spinrep(args):
    try:
        rep = spin_representation(args.variant, args.dim)
    except (ValueError, SuperAlgebraError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL
    result = {"version": __version__, "variant": args.variant,
              "dim": str(args.dim), "fock_dim": str(rep.space_dim)}
    if args.check:
        rng = random.Random(_seed_of(args))
        car = check_car(args.dim, rng=rng)
        if car is not None:
            print("error: CAR violation: %s" % car["identity"], file=sys.stderr)
            return FAIL
        result["car"] = "ok"
        res = check_unitary_representation(rep.algebra, rep)
        if not res.ok:
            print("error: representation check failed", file=sys.stderr)
            return FAIL
        result["unitary"] = "ok"
        result["faithful"] = res.faithful
        if args.variant == "spin_h_hat":
            spec = number_spectrum(rep)
            result["spectrum"] = {str(k): str(v) for k, v in sorted(spec.items())}
    if args.out:
        _atomic_write(args.out, _dumps(rep.to_json_dict()))
    _emit(result, None)
    return OK


def cmd_tangent_rep(args):
    try:
        kind, n = _parse_ktag(args.k)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE
    try:
        rep = tilde_tangent_representation(kind, n)
    except (ValueError, SuperAlgebraError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL
    result = {"version": __version__, "k": args.k,
              "fock_dim": str(rep.space_dim), "scale": str(rep.meta["scale"])}
    if args.check:
        res = check_unitary_representation(rep.algebra, rep)
        if not res.ok:
            print("error: representation check failed", file=sys.stderr)
            return FAIL
        result["unitary"] = "ok"
        result["faithful"] = res.faithful
    if args.out:
        _atomic_write(args.out, _dumps(rep.to_json_dict()))
    _emit(result, None)
    return OK


def make_parser():
    p = argparse.ArgumentParser(
        prog="superdecomp",
        description="Exact constructors, decomposition and unitarity "
                    "certificates for compact Lie superalgebras.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a family member and write it")
    c.add_argument("--family", required=True, choices=FamilySpec.TAGS)
    c.add_argument("--params", required=True,
                   help="comma separated, e.g. 2,1 or su,2")
    c.add_argument("--out", required=True)
    c.add_argument("--name")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="run a verification on an algebra file")
    c.add_argument("what", choices=["jacobi", "killing", "center", "eq-square"])
    c.add_argument("file")
    c.add_argument("--out")
    c.add_argument("--seed", type=int)
    c.add_argument("--samples", type=int, default=200)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("decompose", help="run the structure pipeline")
    c.add_argument("file")
    c.add_argument("--report")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("unitarity", help="necessary-condition report")
    c.add_argument("file")
    c.add_argument("--out")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_unitarity)

    c = sub.add_parser("spinrep", help="spin representation on the Fock space")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--variant", choices=["spin_h", "spin_h_hat"],
                   default="spin_h_hat")
    c.add_argument("--check", action="store_true")
    c.add_argument("--out")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_spinrep)

    c = sub.add_parser("tangent-rep",
                       help="spin representation of the extended tangent algebra")
    c.add_argument("--k", required=True, help="compact simple tag, e.g. su2")
    c.add_argument("--check", action="store_true")
    c.add_argument("--out")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_tangent_rep)
    return p


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except SuperAlgebraError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
