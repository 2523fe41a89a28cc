"""Command-line front end.

Exit codes: 0 success, 1 user error, 2 a check failed (witness printed),
3 an enumeration budget was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import generators, jsonio, oracles
from .actions import ActionLibrary, depth, format_action, parse_action
from .canonical import canonical_map, realize
from .errors import BudgetExceeded, NotRepresentable, SeqSavageError
from .logic import PropSet, atom_formula, format_formula, parse_formula
from .olt import progress_of
from .preferences import CancellationWitness, check_cancellation, certify_cancellation
from .representation import (assemble, check_pr_compatibility, expected_utility,
                             solve_state_dependent, verify_representation)
from .semantics import interpret

OK, USER_ERROR, CHECK_FAILED, OVER_BUDGET = 0, 1, 2, 3
MAX_PROPS = 6


class UserError(Exception):
    pass


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--props", help="comma-separated proposition names, e.g. p,q")
    common.add_argument("--F", action="append", default=[], metavar="FORMULA",
                        help="an effect formula allowed inside do(...); repeatable")
    common.add_argument("--lax", action="store_true", help="admit any satisfiable effect")
    common.add_argument("--budget", type=int, help="enumeration budget (default: $SEQSAVAGE_BUDGET or 100000)")
    common.add_argument("--out", help="write the JSON result here instead of stdout")

    parser = argparse.ArgumentParser(prog="seqsavage", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", parents=[common], help="canonical map and canonical action")
    p.add_argument("--action", required=True)

    p = sub.add_parser("eval", parents=[common], help="run an action in a selection model or an olt")
    p.add_argument("--action", required=True)
    p.add_argument("--model", help="selection model JSON file")
    p.add_argument("--state", help="starting state id in --model")
    p.add_argument("--olt", help="olt JSON (file path or inline)")

    p = sub.add_parser("check", parents=[common], help="check the cancellation axiom")
    p.add_argument("--prefs", required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--depth", type=int)

    p = sub.add_parser("synthesize", parents=[common], help="build a representation")
    p.add_argument("--prefs", required=True)
    p.add_argument("--depth", type=int)

    p = sub.add_parser("verify", parents=[common], help="verify a representation against preferences")
    p.add_argument("--prefs", required=True)
    p.add_argument("--rep", required=True)

    p = sub.add_parser("oracle", parents=[common], help="brute-force reference computations")
    p.add_argument("which", choices=["truth-table", "interpret", "cancellation", "random-action", "random-prefs"])
    p.add_argument("--formula")
    p.add_argument("--action")
    p.add_argument("--model")
    p.add_argument("--state")
    p.add_argument("--prefs")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--seed", type=int, default=0, help="seed for the random-* generators")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--n", type=int, default=6, help="pool size for random-prefs")
    return parser


# -- helpers ----------------------------------------------------------------

def _load_json(text_or_path):
    text = text_or_path
    if not text_or_path.lstrip().startswith(("{", "[")):
        try:
            with open(text_or_path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UserError(f"cannot read {text_or_path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UserError(f"invalid JSON: {exc}") from None


def _props(args):
    if not args.props:
        raise UserError("--props is required")
    names = [x.strip() for x in args.props.split(",") if x.strip()]
    if len(names) > MAX_PROPS:
        raise UserError(f"at most {MAX_PROPS} propositions are supported")
    return PropSet.of(names)


def _library(args):
    props = _props(args)
    effects = args.F or list(props)
    return ActionLibrary.from_strings(props, effects, strict=not args.lax)


def _emit(args, payload):
    text = jsonio.dumps(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- commands ---------------------------------------------------------------

def cmd_canon(args):
    lib = _library(args)
    action = parse_action(args.action, lib)
    cmap = canonical_map(action, lib)
    canon = realize(cmap, lib.props)
    _emit(args, {"action": format_action(action), "depth": depth(action), "map": jsonio.map_to_json(cmap),
                 "canonical_action": format_action(canon), "canonical_action_json": jsonio.action_to_json(canon)})
    return OK


def cmd_eval(args):
    lib = _library(args)
    action = parse_action(args.action, lib)
    if args.olt:
        olt = jsonio.olt_from_json(_load_json(args.olt), lib.props.size)
        g = progress_of(action, olt, lib)
        node = g(())
        atom = olt.label(node)
        _emit(args, {"node": jsonio.path_to_str(node), "atom": atom,
                     "atom_formula": format_formula(atom_formula(lib.props.atom(atom), lib.props)),
                     "progress": jsonio.progress_to_json(g)})
        return OK
    if not args.model or args.state is None:
        raise UserError("eval needs --olt, or --model with --state")
    sm = jsonio.model_from_json(_load_json(args.model), lib.props)
    _emit(args, {"state": interpret(action, sm, args.state)})
    return OK


def cmd_check(args):
    lib = _library(args)
    po = jsonio.prefs_from_json(_load_json(args.prefs), lib)
    w = check_cancellation(po, lib, args.max_n, args.budget)
    if w is not None:
        _emit(args, {"status": "violation", "source": "tuple search", "witness": jsonio.witness_to_json(w, lib)})
        return CHECK_FAILED
    cert = certify_cancellation(po, lib, args.depth)
    if isinstance(cert, CancellationWitness):
        _emit(args, {"status": "violation", "source": "infeasibility certificate",
                     "witness": jsonio.witness_to_json(cert, lib)})
        return CHECK_FAILED
    _emit(args, {"status": "ok", "max_n": args.max_n, "v": jsonio.utility_to_json(cert)})
    return OK


def cmd_synthesize(args):
    lib = _library(args)
    po = jsonio.prefs_from_json(_load_json(args.prefs), lib)
    try:
        v = solve_state_dependent(po, lib, args.depth)
    except NotRepresentable:
        w = certify_cancellation(po, lib, args.depth)
        _emit(args, {"status": "not representable", "witness": jsonio.witness_to_json(w, lib)})
        return CHECK_FAILED
    rep = assemble(v, lib, args.budget)
    out = jsonio.representation_to_json(rep)
    out["expected_utility"] = [{"action": format_action(a), "value": jsonio.rational(expected_utility(rep, a, args.budget))}
                               for a in po.pool]
    _emit(args, out)
    return OK


def cmd_verify(args):
    lib = _library(args)
    po = jsonio.prefs_from_json(_load_json(args.prefs), lib)
    rep = jsonio.representation_from_json(_load_json(args.rep))
    bad = verify_representation(rep, po, args.budget)
    if bad is not None:
        _emit(args, {"status": "violation", "pair": [format_action(a) for a in bad],
                     "expected_utility": [jsonio.rational(expected_utility(rep, a)) for a in bad]})
        return CHECK_FAILED
    pr = check_pr_compatibility(rep.k, lib.props.size, budget=args.budget)
    if pr is not None:
        k, k2, s, want, got = pr
        _emit(args, {"status": "pr incompatible", "k": k, "k_prime": k2, "olt": jsonio.olt_to_json(s),
                     "expected": jsonio.rational(want), "found": jsonio.rational(got)})
        return CHECK_FAILED
    _emit(args, {"status": "ok"})
    return OK


def cmd_oracle(args):
    if args.which == "truth-table":
        props = _props(args)
        f = parse_formula(args.formula or "", props)
        _emit(args, {"atoms": list(oracles.truth_table(f, list(props)))})
        return OK
    lib = _library(args)
    if args.which == "interpret":
        sm = jsonio.model_from_json(_load_json(args.model), lib.props)
        _emit(args, {"state": oracles.small_step(parse_action(args.action, lib), sm, args.state)})
        return OK
    if args.which == "random-action":
        a = generators.random_action(lib, args.seed, args.depth)
        _emit(args, {"seed": args.seed, "action": format_action(a), "depth": depth(a)})
        return OK
    if args.which == "random-prefs":
        r = generators.rng(args.seed)
        pool = generators.random_pool(lib, r, args.depth, args.n)
        po = generators.random_order(pool, r, r.randint(2, 4))
        _emit(args, {"seed": args.seed, **jsonio.prefs_to_json(po)})
        return OK
    if not args.prefs:
        raise UserError("oracle cancellation needs --prefs")
    po = jsonio.prefs_from_json(_load_json(args.prefs), lib)
    found = oracles.cancellation_violation(po, lib, args.max_n)
    if found is None:
        _emit(args, {"status": "ok", "max_n": args.max_n})
        return OK
    _emit(args, {"status": "violation", "alphas": [format_action(a) for a in found[0]],
                 "betas": [format_action(b) for b in found[1]]})
    return CHECK_FAILED


COMMANDS = {"canon": cmd_canon, "eval": cmd_eval, "check": cmd_check, "synthesize": cmd_synthesize,
            "verify": cmd_verify, "oracle": cmd_oracle}


def _error(kind, message, code, **extra):
    print(json.dumps({"error": kind, "message": message, **extra}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.budget is not None and args.budget <= 0:
        return _error("UserError", "--budget must be positive", USER_ERROR)
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        return _error("BudgetExceeded", str(exc), OVER_BUDGET, what=exc.what, count=exc.count, budget=exc.budget)
    except (SeqSavageError, UserError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return _error(type(exc).__name__, str(msg), USER_ERROR)


if __name__ == "__main__":
    sys.exit(main())
