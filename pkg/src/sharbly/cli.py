"""Command line front end.

Exit codes: 0 ok, 1 verification failed, 2 malformed input, 3 grade
mismatch, 4 domain error (bad rank, width cap, oversized complex).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import bialgebra as bi
from .canonical import GradeError, TooWideError, chi_value
from .classes import is_cycle, wheel
from .io import (
    SchemaError,
    element_from_dict,
    element_to_dict,
    pool_from_dict,
    pool_hash,
    tensor_to_dict,
)
from .truncation import ComplexTooLarge, VectorPool, build_complex, find_boundary_witness, homology_dims
from .verify import AXIOMS, verify

EXIT_OK, EXIT_FAIL, EXIT_SCHEMA, EXIT_GRADE, EXIT_DOMAIN = 0, 1, 2, 3, 4


class DomainError(ValueError):
    pass


def _load_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"{path}: {exc}") from None


def _element(path: str):
    return element_from_dict(_load_json(path))


def _pool(path: str) -> VectorPool:
    n, vectors = pool_from_dict(_load_json(path))
    return VectorPool(n, tuple(vectors))


def cmd_canon(args):
    return element_to_dict(_element(args.input)), EXIT_OK


def cmd_d(args):
    return element_to_dict(bi.boundary(_element(args.input))), EXIT_OK


def cmd_mul(args):
    return element_to_dict(bi.product(_element(args.left), _element(args.right))), EXIT_OK


def cmd_comul(args):
    return tensor_to_dict(bi.coproduct(_element(args.input))), EXIT_OK


def cmd_antipode(args):
    return element_to_dict(bi.antipode(_element(args.input))), EXIT_OK


def cmd_primitive(args):
    return {"primitive": bi.is_primitive(_element(args.input))}, EXIT_OK


def cmd_wheel(args):
    if args.n < 3:
        raise DomainError(f"wheel sharblies need n >= 3, got {args.n}")
    w = wheel(args.n, args.chi)
    if not args.check:
        return element_to_dict(w), EXIT_OK
    return {"element": element_to_dict(w), "cycle": is_cycle(w), "primitive": bi.is_primitive(w)}, EXIT_OK


def cmd_verify(args):
    report = verify(
        args.axiom,
        samples=args.samples,
        seed=args.seed,
        max_n=args.max_n,
        max_k=args.max_k,
        entry_bound=args.entry_bound,
        chi=args.chi,
    )
    return report.to_dict(), EXIT_OK if report.passed else EXIT_FAIL


def cmd_truncate(args):
    pool = _pool(args.pool)
    if pool.n != args.n:
        raise DomainError(f"pool rank {pool.n} does not match --n {args.n}")
    c = build_complex(args.n, args.chi, pool, args.max_k)
    return {
        "n": args.n,
        "chi": args.chi,
        "max_k": args.max_k,
        "dims_chain": c.chain_dims,
        "dims_homology": homology_dims(c),
        "pool_hash": pool_hash(pool.n, pool.vectors),
    }, EXIT_OK


def cmd_witness(args):
    y = _element(args.target)
    pool = _pool(args.pool)
    if pool.n != y.n:
        raise DomainError(f"pool rank {pool.n} does not match target rank {y.n}")
    x = find_boundary_witness(y, pool)
    return {
        "witness": None if x is None else element_to_dict(x),
        "pool_hash": pool_hash(pool.n, pool.vectors),
    }, EXIT_OK


def _chi(text: str) -> str:
    chi_value(text)
    return text


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # Subcommands repeat the global flags with suppressed defaults so a flag
    # given before the subcommand is not overwritten.
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS if suppress else None)
    p.add_argument("--chi", type=_chi, choices=["triv", "det"], **({} if suppress else {"default": "triv"}))
    p.add_argument("--seed", type=int, **({} if suppress else {"default": 42}))
    p.add_argument("--json-out", help="write the JSON result here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharbly", description=__doc__.splitlines()[0], parents=[_global_flags(False)]
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _global_flags(True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    for name, func, help_ in [
        ("canon", cmd_canon, "canonicalize an element"),
        ("d", cmd_d, "boundary of an element"),
        ("comul", cmd_comul, "coproduct of an element"),
        ("antipode", cmd_antipode, "antipode of an element"),
        ("primitive", cmd_primitive, "test primitivity"),
    ]:
        add(name, func, help_).add_argument("input", help="element JSON file, or - for stdin")

    p = add("mul", cmd_mul, "product of two elements")
    p.add_argument("left")
    p.add_argument("right")

    p = add("wheel", cmd_wheel, "wheel sharbly w_n")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", default=False, help="also report cycle and primitivity")

    p = add("verify", cmd_verify, "randomized check of one bialgebra identity")
    p.add_argument("axiom", choices=AXIOMS)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--entry-bound", type=int, default=3)

    p = add("truncate", cmd_truncate, "homology of a pool-truncated complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pool", required=True)
    p.add_argument("--max-k", type=int, required=True)

    p = add("witness", cmd_witness, "search for x with d(x) = target on a pool")
    p.add_argument("--target", required=True)
    p.add_argument("--pool", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except SchemaError as exc:
        print(f"sharbly: malformed input: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except GradeError as exc:
        print(f"sharbly: grade mismatch: {exc}", file=sys.stderr)
        return EXIT_GRADE
    except (DomainError, TooWideError, ComplexTooLarge) as exc:
        print(f"sharbly: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = json.dumps(payload)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
