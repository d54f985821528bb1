"""Command-line front end.

One binary with subcommands covering the calculus (waning-check, closure,
eval), the lattice (compare, join, chain, below, embed, hasse), membership
and refinement witnesses (member, subset, witness), and the verification
suites (verify).  Values cross the boundary as JSON; "omega" is the single
non-numeric token.  Usage errors exit 2, domain errors exit 1, and checks
that find counterexamples exit 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import descriptors as de
from . import serialize as se
from .errors import WaningError
from .extnat import OMEGA
from .functions import (
    WaningFn,
    closure,
    descending_chain_element,
    enumerate_below,
    is_waning,
)
from .harness import run_suite, subset_check, suite_names
from .topology import compare, embed_poset, hasse_dot, join_topology


class _UsageError(Exception):
    pass


def _json_flag(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"flag {flag} is not valid JSON: {exc}") from exc


def _parse_index(text: str):
    if text == "omega":
        return OMEGA
    try:
        value = int(text)
    except ValueError as exc:
        raise _UsageError(f"expected a natural or \"omega\", got {text!r}") from exc
    if value < 0:
        raise _UsageError(f"expected a non-negative index, got {value}")
    return value


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _genfn_arg(args, flag="--f"):
    fn = se.fn_from_obj(_json_flag(getattr(args, flag.strip("-")), flag))
    return fn.as_genfn() if isinstance(fn, WaningFn) else fn


def _cmd_waning_check(args) -> int:
    print("true" if is_waning(_genfn_arg(args)) else "false")
    return 0


def _cmd_closure(args) -> int:
    print(se.dumps(se.waning_to_obj(closure(_genfn_arg(args)))))
    return 0


def _cmd_eval(args) -> int:
    fn = se.fn_from_obj(_json_flag(args.f, "--f"))
    value = fn(_parse_index(args.n))
    print(se.dumps(se.value_to_obj(value)))
    return 0


def _cmd_compare(args) -> int:
    t1 = se.topology_from_obj(_json_flag(args.t1, "--t1"))
    t2 = se.topology_from_obj(_json_flag(args.t2, "--t2"))
    print(compare(t1, t2).value)
    return 0


def _cmd_join(args) -> int:
    t1 = se.topology_from_obj(_json_flag(args.t1, "--t1"))
    t2 = se.topology_from_obj(_json_flag(args.t2, "--t2"))
    print(se.dumps(se.topology_to_obj(join_topology(t1, t2))))
    return 0


def _cmd_chain(args) -> int:
    print(se.dumps(se.waning_to_obj(descending_chain_element(args.n))))
    return 0


def _cmd_below(args) -> int:
    f = se.waning_from_obj(_json_flag(args.f, "--f"))
    print(se.dumps([se.waning_to_obj(w) for w in enumerate_below(f)]))
    return 0


def _cmd_embed(args) -> int:
    with open(args.poset) as fh:
        poset = se.poset_from_obj(json.load(fh))
    mapping = embed_poset(poset)
    print(
        se.dumps({label: se.waning_to_obj(w) for label, w in mapping.items()})
    )
    return 0


def _cmd_hasse(args) -> int:
    fns = [se.waning_from_obj(_json_flag(text, "--f")) for text in args.f]
    _emit(hasse_dot(fns), args.out)
    return 0


def _cmd_member(args) -> int:
    if args.d is not None:
        d = se.descriptor_from_obj(_json_flag(args.d, "--d"))
    elif args.Ys is not None:
        d = de.Wany(args.n or 0, _json_flag(args.Ys, "--Ys"))
    else:
        raise _UsageError("member needs --d, or --Ys (with --n) for a wany set")
    h = se.pb_from_obj(_json_flag(args.pb, "--pb"))
    print("true" if de.member(d, h) else "false")
    return 0


def _report_exit(report, out: Optional[str]) -> int:
    print(report.summary())
    for inputs, witness in report.counterexamples:
        print(f"counterexample {se.dumps(se.pb_to_obj(witness))} {inputs}")
    if out:
        with open(out, "w") as fh:
            json.dump(report.to_obj(), fh, indent=2)
            fh.write("\n")
    return 0 if report.ok else 3


def _cmd_subset(args) -> int:
    d1 = se.descriptor_from_obj(_json_flag(args.d1, "--d1"))
    d2 = se.descriptor_from_obj(_json_flag(args.d2, "--d2"))
    return _report_exit(subset_check(d1, d2, args.bound), args.out)


def _require(args, *names) -> None:
    missing = [name for name in names if getattr(args, name, None) is None]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        raise _UsageError(f"witness --kind {args.kind} needs {flags}")


def _cmd_witness(args) -> int:
    kind = args.kind
    if kind == "order":
        _require(args, "f", "g", "r")
        f = se.waning_from_obj(_json_flag(args.f, "--f"))
        g = se.waning_from_obj(_json_flag(args.g, "--g"))
        n, b, h = de.order_counterexample(f, g, args.r)
        print(se.dumps({"n": n, "b": b, "h": se.pb_to_obj(h)}))
        return 0
    if kind == "basis":
        _require(args, "f", "pb")
        f = se.waning_from_obj(_json_flag(args.f, "--f"))
        g = se.pb_from_obj(_json_flag(args.pb, "--pb"))
        avoid = _json_flag(args.X, "--X") if args.X else []
        print(se.dumps({"r": de.basis_refinement(f, args.n or 0, avoid, g)}))
        return 0
    if kind == "much-wan":
        _require(args, "f", "pb", "r")
        f = _genfn_arg(args)
        g = se.pb_from_obj(_json_flag(args.pb, "--pb"))
        print(se.dumps(se.descriptor_to_obj(de.much_wan_witness(f, g, args.r))))
        return 0
    if kind == "tfprime":
        _require(args, "f", "pb")
        f = _genfn_arg(args)
        g = se.pb_from_obj(_json_flag(args.pb, "--pb"))
        avoid = _json_flag(args.X, "--X") if args.X else []
        result = de.tfprime_refinement(f, args.n or 0, avoid, g)
        print(se.dumps(se.descriptor_to_obj(result)))
        return 0
    if kind == "cover":
        _require(args, "pb")
        h0 = se.pb_from_obj(_json_flag(args.pb, "--pb"))
        avoid = _json_flag(args.X, "--X") if args.X else []
        covered = _json_flag(args.m, "--m") if args.m else []
        w = de.cover_witness(args.n or 0, h0, avoid, covered, args.dommiss)
        print(se.dumps(se.pb_to_obj(w)))
        return 0
    raise _UsageError(f"unknown witness kind {kind!r}")


def _cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        bound=args.bound,
        seed=args.seed,
        sample=args.sample,
        jobs=args.jobs,
    )
    return _report_exit(report, args.out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="waning",
        description="Calculus of waning functions, neighbourhood descriptors, "
        "and bounded-universe verification for topologies on partial bijections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, **flags):
        p = sub.add_parser(name)
        for flag, kwargs in flags.items():
            p.add_argument(f"--{flag}", **kwargs)
        p.set_defaults(handler=handler)
        return p

    fn_flag = {"required": True, "help": "function JSON"}
    cmd("waning-check", _cmd_waning_check, f=dict(fn_flag))
    cmd("closure", _cmd_closure, f=dict(fn_flag))
    cmd("eval", _cmd_eval, f=dict(fn_flag), n={"required": True, "help": "index"})
    topo = {"required": True, "help": "topology JSON"}
    cmd("compare", _cmd_compare, t1=dict(topo), t2=dict(topo))
    cmd("join", _cmd_join, t1=dict(topo), t2=dict(topo))
    cmd("chain", _cmd_chain, n={"type": int, "required": True})
    cmd("below", _cmd_below, f=dict(fn_flag))
    cmd(
        "embed",
        _cmd_embed,
        poset={"required": True, "help": "path to a poset JSON file"},
    )
    p = sub.add_parser("hasse")
    p.add_argument("--f", action="append", required=True, help="waning JSON (repeatable)")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_hasse)
    cmd(
        "member",
        _cmd_member,
        d={"help": "descriptor JSON"},
        pb={"required": True, "help": "partial bijection JSON"},
        n={"type": int},
        Ys={"help": "family-of-sets JSON for a wany set"},
    )
    cmd(
        "subset",
        _cmd_subset,
        d1={"required": True},
        d2={"required": True},
        bound={"type": int, "default": 4},
        out={},
    )
    p = sub.add_parser("witness")
    p.add_argument(
        "--kind",
        choices=["order", "basis", "much-wan", "tfprime", "cover"],
        default="order",
    )
    p.add_argument("--f", help="function JSON")
    p.add_argument("--g", help="waning JSON")
    p.add_argument("--pb", help="partial bijection JSON")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--X", help="set JSON")
    p.add_argument("--m", help="covered-values JSON")
    p.add_argument("--dommiss", action="store_true")
    p.set_defaults(handler=_cmd_witness)
    cmd(
        "verify",
        _cmd_verify,
        suite={"required": True, "choices": list(suite_names())},
        bound={"type": int},
        seed={"type": int, "default": 1},
        sample={"type": int},
        jobs={"type": int, "default": 0},
        out={},
    )
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) == 0:
        import os

        args.jobs = os.cpu_count() or 1
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except WaningError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TypeError, KeyError, IndexError, ValueError, OSError) as exc:
        # malformed payloads and unreadable files are caller mistakes
        print(f"usage error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
