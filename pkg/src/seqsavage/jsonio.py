"""JSON encodings for every public object.

Rationals travel as "p/q" strings; paths as dot-joined atom indices with the
root written as "". Outputs use sorted keys so equal objects serialize to
identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .actions import NOOP, ActionLibrary, Do, IfThenElse, Noop, Seq, format_action, parse_action
from .canonical import NOOP_ENTRY, CanonicalMap, DoA, NoopEntry, do_then
from .logic import BOTTOM, TOP, And, AtomSet, Bottom, Iff, Implies, Not, Or, Prop, Top, format_formula
from .olt import Olt, ProgressFunction, nonleaf_paths
from .preferences import CancellationWitness, PreferenceOrder
from .representation import Representation, StateDependentUtility
from .semantics import BasicModel, SelectionModel

_OPS = {And: "and", Or: "or", Implies: "implies", Iff: "iff"}
_OPS_BACK = {v: k for k, v in _OPS.items()}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    return Fraction(text)


# -- formulas and actions ---------------------------------------------------

def formula_to_json(f):
    if isinstance(f, Prop):
        return {"prop": f.name}
    if isinstance(f, Top):
        return {"const": True}
    if isinstance(f, Bottom):
        return {"const": False}
    if isinstance(f, Not):
        return {"op": "not", "args": [formula_to_json(f.arg)]}
    return {"op": _OPS[type(f)], "args": [formula_to_json(f.left), formula_to_json(f.right)]}


def formula_from_json(d):
    if "prop" in d:
        return Prop(d["prop"])
    if "const" in d:
        return TOP if d["const"] else BOTTOM
    args = [formula_from_json(a) for a in d["args"]]
    if d["op"] == "not":
        return Not(*args)
    return _OPS_BACK[d["op"]](*args)


def action_to_json(a):
    if isinstance(a, Noop):
        return {"noop": None}
    if isinstance(a, Do):
        return {"do": formula_to_json(a.effect)}
    if isinstance(a, IfThenElse):
        return {"ite": [formula_to_json(a.test), action_to_json(a.then), action_to_json(a.orelse)]}
    return {"seq": [action_to_json(a.first), action_to_json(a.second)]}


def action_from_json(d):
    if "noop" in d:
        return NOOP
    if "do" in d:
        return Do(formula_from_json(d["do"]))
    if "ite" in d:
        test, then, orelse = d["ite"]
        return IfThenElse(formula_from_json(test), action_from_json(then), action_from_json(orelse))
    first, second = d["seq"]
    return Seq(action_from_json(first), action_from_json(second))


# -- canonical maps ---------------------------------------------------------

def entry_to_json(e):
    if isinstance(e, NoopEntry):
        return {"noop": None}
    if isinstance(e, DoA):
        return {"doA": list(e.atoms)}
    return {"doA_seq": [list(e.atoms), map_to_json(e.rest)]}


def entry_from_json(d):
    if "noop" in d:
        return NOOP_ENTRY
    if "doA" in d:
        return DoA(AtomSet.of(d["doA"]))
    atoms, rest = d["doA_seq"]
    return do_then(AtomSet.of(atoms), map_from_json(rest))


def map_to_json(m):
    return {str(i): entry_to_json(e) for i, e in enumerate(m.entries, 1)}


def map_from_json(d):
    return CanonicalMap(tuple(entry_from_json(d[str(i)]) for i in range(1, len(d) + 1)))


# -- models -----------------------------------------------------------------

def model_to_json(sm):
    m = sm.model
    return {
        "states": [str(s) for s in m.states],
        "valuation": {p: sorted(str(s) for s in m.valuation[p]) for p in m.props},
        "sel": [{"from": str(s), "effect_atoms": list(A), "to": str(t)}
                for (s, A), t in sorted(sm.sel.items(), key=lambda kv: (str(kv[0][0]), tuple(kv[0][1])))],
    }


def model_from_json(d, props):
    model = BasicModel(props, tuple(d["states"]), {p: d.get("valuation", {}).get(p, []) for p in props})
    sel = {(row["from"], AtomSet.of(row["effect_atoms"])): row["to"] for row in d.get("sel", [])}
    return SelectionModel(model, sel)


# -- olts and progress functions --------------------------------------------

def path_to_str(path):
    return ".".join(str(x) for x in path)


def path_from_str(text):
    return tuple(int(x) for x in text.split(".")) if text else ()


def olt_to_json(s):
    return {"k": s.k, "root_atom": s.root_atom,
            "orders": {path_to_str(p): list(o) for p, o in zip(nonleaf_paths(s.size, s.k), s.orders)}}


def olt_from_json(d, size):
    orders = {path_from_str(p): tuple(o) for p, o in d.get("orders", {}).items()}
    return Olt.from_orders(size, d["k"], d["root_atom"], orders)


def progress_to_json(g):
    return {path_to_str(t): path_to_str(u) for t, u in g.moves}


def progress_from_json(d):
    return ProgressFunction({path_from_str(t): path_from_str(u) for t, u in d.items()})


# -- preferences and witnesses ----------------------------------------------

def prefs_to_json(po):
    return {"pool": [format_action(a) for a in po.pool], "tiers": po.tier_groups()}


def prefs_from_json(d, lib):
    pool = [parse_action(text, lib) for text in d["pool"]]
    return PreferenceOrder.from_tiers(pool, d["tiers"])


def witness_to_json(w, lib):
    return {
        "alphas": [format_action(a) for a in w.alphas],
        "betas": [format_action(b) for b in w.betas],
        "multisets": {
            str(a): {"alphas": _multiset(left), "betas": _multiset(right)}
            for a, (left, right) in w.multisets(lib).items()
        },
        "failed_conclusion": f"{format_action(w.betas[-1])} is not weakly preferred to {format_action(w.alphas[-1])}",
    }


def _multiset(counter):
    rows = [{"entry": entry_to_json(e), "count": c} for e, c in counter.items()]
    return sorted(rows, key=lambda r: json.dumps(r, sort_keys=True))


def witness_from_json(d, lib):
    return CancellationWitness(tuple(parse_action(t, lib) for t in d["alphas"]),
                               tuple(parse_action(t, lib) for t in d["betas"]))


# -- representations --------------------------------------------------------

def library_to_json(lib):
    return {"prop_set": list(lib.props), "F": [format_formula(f) for f in lib.effects]}


def library_from_json(d):
    return ActionLibrary.from_strings(d["prop_set"], d["F"])


def utility_to_json(v):
    rows = [{"atom": a, "entry": entry_to_json(e), "value": rational(val)} for (a, e), val in v.table.items()]
    return sorted(rows, key=lambda r: (r["atom"], json.dumps(r["entry"], sort_keys=True)))


def utility_from_json(rows, k):
    return StateDependentUtility(k, {(r["atom"], entry_from_json(r["entry"])): parse_rational(r["value"]) for r in rows})


def representation_to_json(rep):
    u = [{"olt": olt_to_json(s), "progress": progress_to_json(g), "value": rational(val)}
         for (s, g), val in rep.u.items()]
    u.sort(key=lambda r: json.dumps(r, sort_keys=True))
    out = library_to_json(rep.lib)
    out.update({"k": rep.k, "n_olts": rep.n_olts, "pr": "uniform on (s, id)",
                "u": u, "v": utility_to_json(rep.v)})
    return out


def representation_from_json(d):
    lib = library_from_json(d)
    size = lib.props.size
    u = {(olt_from_json(r["olt"], size), progress_from_json(r["progress"])): parse_rational(r["value"])
         for r in d["u"]}
    v = utility_from_json(d["v"], d["k"])
    return Representation(d["k"], lib, d["n_olts"], u, v)


__all__ = [name for name in dir() if name.endswith(("_json", "_str")) or name in ("dumps", "rational", "parse_rational")]
