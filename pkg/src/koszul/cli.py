"""Batch CLI: thin client over the service handlers.

Every subcommand builds the same request model the HTTP endpoint takes,
dispatches in-process, and prints the response as compact JSON on stdout.
Exit codes: 0 success, 2 bad input, 1 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from . import schemas as S
from .errors import InputError, InvariantViolation
from .service import HANDLERS


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _field_flag(value: str):
    if value == "Q":
        return "Q"
    if value.startswith("F") and value[1:].isdigit():
        return {"Fp": int(value[1:])}
    if value.isdigit():
        return {"Fp": int(value)}
    raise InputError(f"bad field {value!r}; expected Q, F<p>, or a prime")


def _elements_flag(value: str) -> list:
    parts = [p.strip() for p in value.split(",")]
    return [p for p in parts if p]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koszul",
        description="Exact graded-ring computations with deterministic JSON reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        return p

    p = cmd("support", "support of a module presentation or a perfect complex")
    p.add_argument("--module", help="module presentation JSON file")
    p.add_argument("--complex", dest="complex_", help="complex JSON file")
    p.add_argument("--ring", help="ring JSON file (when not inline)")

    p = cmd("koszul", "Koszul complex on elements, with its homology window")
    p.add_argument("--ring", required=True)
    p.add_argument("--elements", required=True, help="comma-separated polynomials")
    p.add_argument("--module", help="optional module presentation JSON file")
    p.add_argument("--d-max", type=int, default=30)

    p = cmd("regseq", "regular-sequence certificate by Hilbert series factorization")
    p.add_argument("--ring", required=True)
    p.add_argument("--elements", required=True)
    p.add_argument("--ideal", help="ambient quotient ideal JSON file")
    p.add_argument("--koszul-check", action="store_true", help="run the Koszul homology oracle too")
    p.add_argument("--expand", type=int, default=20)

    p = cmd("torsion", "dimensions of the ideal-power-torsion submodule")
    p.add_argument("--module", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--ring")
    p.add_argument("--d-max", type=int, default=30)

    p = cmd("sr-ci", "complete-intersection test for a face ideal")
    p.add_argument("--complex", dest="complex_", required=True)
    p.add_argument("--field", default="Q")

    p = cmd("soci-tower", "tower of odd-sphere stages trimming the face ideal")
    p.add_argument("--complex", dest="complex_", required=True)
    p.add_argument("--field", default="Q")

    p = cmd("dj", "Stanley-Reisner presentation and Hilbert series of the DJ space")
    p.add_argument("--complex", dest="complex_", required=True)
    p.add_argument("--field", default="Q")
    p.add_argument("--expand", type=int, default=20)

    p = cmd("hilbert", "Hilbert series of a graded quotient")
    p.add_argument("--ideal", required=True)
    p.add_argument("--ring")
    p.add_argument("--expand", type=int, default=30)

    p = cmd("thick-classify", "specialization-closed subset naming a thick subcategory")
    p.add_argument("--generators", required=True, help="JSON file: list of complexes")
    p.add_argument("--ring")

    p = cmd("thick-generator", "Koszul generator whose support is a given subset")
    p.add_argument("--ring", required=True)
    p.add_argument("--subset", required=True, help="JSON file: sorted index lists")

    p = cmd("adams", "injectivity bound along the tower of fiber-power quotients")
    p.add_argument("--ring", required=True)
    p.add_argument("--sequence", required=True, help="comma-separated regular sequence")
    p.add_argument("--module", help="perfect complex JSON file")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--d-max", type=int, default=30)
    p.add_argument("--quotient", type=int, help="also report homology of stage n")

    p = cmd("po-check", "Euler exactness of one tower triangle")
    p.add_argument("--ring", required=True)
    p.add_argument("--sequence", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d-max", type=int, default=30)

    p = cmd("ff-order", "compare two perfect complexes by support inclusion")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--ring")

    p = cmd("dg-cohomology", "cohomology dimensions of a free graded-commutative dg algebra")
    p.add_argument("--dg", required=True, help="dg algebra JSON file")
    p.add_argument("--d-max", type=int, default=30)

    return parser


def _request_payload(args) -> tuple:
    c = args.command
    ring = _read_json(args.ring) if getattr(args, "ring", None) else None
    if c == "support":
        if bool(args.module) == bool(args.complex_):
            raise InputError("support wants exactly one of --module or --complex")
        payload = {"ring": ring}
        if args.module:
            payload["module"] = _read_json(args.module)
        else:
            payload["complex"] = _read_json(args.complex_)
        return c, payload
    if c == "koszul":
        payload = {
            "ring": ring,
            "elements": _elements_flag(args.elements),
            "d_max": args.d_max,
        }
        if args.module:
            payload["module"] = _read_json(args.module)
        return c, payload
    if c == "regseq":
        payload = {
            "ring": ring,
            "elements": _elements_flag(args.elements),
            "koszul_check": args.koszul_check,
            "expand": args.expand,
        }
        if args.ideal:
            payload["ideal"] = _read_json(args.ideal)
        return c, payload
    if c == "torsion":
        return c, {
            "module": _read_json(args.module),
            "ideal": _read_json(args.ideal),
            "ring": ring,
            "d_max": args.d_max,
        }
    if c in ("sr-ci", "soci-tower"):
        return c, {
            "complex": _read_json(args.complex_),
            "field": _field_flag(args.field),
        }
    if c == "dj":
        return c, {
            "complex": _read_json(args.complex_),
            "field": _field_flag(args.field),
            "expand": args.expand,
        }
    if c == "hilbert":
        return c, {"ideal": _read_json(args.ideal), "ring": ring, "expand": args.expand}
    if c == "thick-classify":
        gens = _read_json(args.generators)
        if not isinstance(gens, list):
            raise InputError("--generators file must hold a JSON list of complexes")
        return c, {"generators": gens, "ring": ring}
    if c == "thick-generator":
        return c, {"ring": ring, "subset": _read_json(args.subset)}
    if c == "adams":
        payload = {
            "ring": ring,
            "sequence": _elements_flag(args.sequence),
            "n_max": args.n_max,
            "d_max": args.d_max,
        }
        if args.module:
            payload["module"] = _read_json(args.module)
        if args.quotient is not None:
            payload["quotient"] = args.quotient
        return c, payload
    if c == "po-check":
        return c, {
            "ring": ring,
            "sequence": _elements_flag(args.sequence),
            "n": args.n,
            "d_max": args.d_max,
        }
    if c == "ff-order":
        return c, {"x": _read_json(args.x), "y": _read_json(args.y), "ring": ring}
    if c == "dg-cohomology":
        return c, {"algebra": _read_json(args.dg), "d_max": args.d_max}
    raise InputError(f"unknown command {c!r}")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        command, payload = _request_payload(args)
        req_model, _ = S.COMMAND_SCHEMAS[command]
        payload = {k: v for k, v in payload.items() if v is not None}
        try:
            request = req_model(**payload)
        except ValidationError as exc:
            raise InputError(
                "; ".join(
                    f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in exc.errors()
                )
            ) from exc
        response = HANDLERS[command](request)
    except InputError as exc:
        _emit({"error": {"message": str(exc)}})
        return 2
    except InvariantViolation as exc:
        _emit({"error": {"message": str(exc)}})
        return 1
    _emit(response.model_dump(exclude_none=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
