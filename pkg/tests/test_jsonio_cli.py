import json
import random

import pytest

from seqsavage import jsonio
from seqsavage.actions import parse_action
from seqsavage.canonical import canonical_map, enumerate_CM
from seqsavage.cli import main
from seqsavage.generators import (induced_order, random_action, random_pool, random_selection_model,
                                  random_utility)
from seqsavage.olt import enumerate_olts, progress_of
from seqsavage.representation import assemble, solve_state_dependent
from seqsavage.semantics import interpret

PQ = ["--props", "p,q", "--F", "p | q", "--F", "p | ~q"]
P = ["--props", "p", "--F", "p", "--F", "~p"]
ROOT = json.dumps({"k": 1, "root_atom": 1, "orders": {"": [3, 4, 2, 1]}})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- round trips -------------------------------------------------------------

def test_action_round_trip(lib_pq):
    r = random.Random(4)
    for _ in range(200):
        a = random_action(lib_pq, r, 3)
        assert jsonio.action_from_json(json.loads(jsonio.dumps(jsonio.action_to_json(a)))) == a


def test_map_round_trip(lib1):
    for m in enumerate_CM(2, lib1):
        assert jsonio.map_from_json(jsonio.map_to_json(m)) == m


def test_olt_and_progress_round_trip(lib1):
    a = parse_action("do(p); if p then do(~p) else noop", lib1)
    for s in enumerate_olts(2, lib1.props):
        assert jsonio.olt_from_json(jsonio.olt_to_json(s), 2) == s
        g = progress_of(a, s, lib1)
        assert jsonio.progress_from_json(jsonio.progress_to_json(g)) == g


def test_model_round_trip(lib_pq):
    r = random.Random(2)
    sm = random_selection_model(lib_pq, r)
    back = jsonio.model_from_json(json.loads(jsonio.dumps(jsonio.model_to_json(sm))), lib_pq.props)
    for _ in range(30):
        a = random_action(lib_pq, r, 2)
        for s in sm.model.states:
            assert interpret(a, back, str(s)) == str(interpret(a, sm, s))


def test_representation_round_trip(lib1):
    r = random.Random(8)
    pool = random_pool(lib1, r, 2, 10)
    rep = assemble(solve_state_dependent(induced_order(random_utility(lib1, r, 2), pool, lib1), lib1), lib1)
    back = jsonio.representation_from_json(json.loads(jsonio.dumps(jsonio.representation_to_json(rep))))
    assert back.u == rep.u and back.v.table == rep.v.table and back.k == rep.k


def test_rationals_are_strings():
    assert jsonio.rational(3) == "3/1" and jsonio.parse_rational("-2/6") == jsonio.parse_rational("-1/3")


# -- command line ------------------------------------------------------------

def test_canon(capsys):
    code, out, _ = run(capsys, "canon", "--props", "p,q", "--F", "p|q", "--action", "do(p|q)")
    assert code == 0
    m = json.loads(out)["map"]
    assert all(e == {"doA": [1, 2, 3]} for e in m.values())


def test_canon_two_step_example(capsys):
    code, out, _ = run(capsys, "canon", "--props", "p,q,r", "--F", "r", "--F", "~r",
                       "--action", "if p then do(r) else (do(~r); do(r))")
    assert code == 0
    for e in json.loads(out)["map"].values():
        assert "doA" in e or "doA_seq" in e


def test_malformed_action_is_user_error(capsys):
    code, out, err = run(capsys, "canon", "--props", "p", "--action", "do(p")
    assert code == 1 and out == "" and "error" in json.loads(err)


def test_eval_in_model(capsys, tmp_path):
    model = {"states": ["s", "t"], "valuation": {"p": ["t"]},
             "sel": [{"from": "s", "effect_atoms": [1], "to": "t"}]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(model))
    assert json.loads(run(capsys, "eval", "--props", "p", "--action", "noop", "--model", str(path),
                          "--state", "s")[1]) == {"state": "s"}
    assert json.loads(run(capsys, "eval", "--props", "p", "--action", "do(p)", "--model", str(path),
                          "--state", "s")[1]) == {"state": "t"}
    code, _, err = run(capsys, "eval", "--props", "p", "--action", "do(p)", "--model", str(path), "--state", "t")
    assert code == 1 and "t" in json.loads(err)["message"]


@pytest.mark.parametrize("action,node", [("do(p | q)", "3"), ("do(p | ~q)", "4")])
def test_eval_olt_example(capsys, action, node):
    code, out, _ = run(capsys, "eval", *PQ, "--action", action, "--olt", ROOT)
    assert code == 0 and json.loads(out)["node"] == node


def test_check_and_synthesize_exit_codes(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"pool": ["do(p)", "do(~p)", "noop"], "tiers": [[0], [1, 2]]}))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"pool": ["do(p)", "if p then do(p) else do(p)"], "tiers": [[0], [1]]}))
    assert run(capsys, "check", *P, "--prefs", str(good))[0] == 0
    code, out, _ = run(capsys, "check", *P, "--prefs", str(bad))
    assert code == 2 and json.loads(out)["witness"]["alphas"]
    assert run(capsys, "synthesize", *P, "--prefs", str(bad))[0] == 2

    rep = tmp_path / "rep.json"
    assert run(capsys, "synthesize", *P, "--prefs", str(good), "--out", str(rep))[0] == 0
    assert run(capsys, "verify", *P, "--prefs", str(good), "--rep", str(rep))[0] == 0
    flipped = tmp_path / "flipped.json"
    flipped.write_text(json.dumps({"pool": ["do(p)", "do(~p)", "noop"], "tiers": [[1, 2], [0]]}))
    assert run(capsys, "verify", *P, "--prefs", str(flipped), "--rep", str(rep))[0] == 2


def test_budget_exceeded(capsys):
    prefs = json.dumps({"pool": ["do(p)", "do(~p)"], "tiers": [[0], [1]]})
    code, out, err = run(capsys, "synthesize", "--props", "p", "--F", "p", "--F", "~p",
                         "--prefs", prefs, "--budget", "1")
    assert code == 3 and out == "" and json.loads(err)["error"] == "BudgetExceeded"


def test_bad_budget(capsys):
    assert run(capsys, "canon", "--props", "p", "--action", "noop", "--budget", "0")[0] == 1


def test_output_is_byte_deterministic(capsys):
    argv = ["oracle", "random-prefs", "--props", "p", "--seed", "11", "--n", "5"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    prefs = json.loads(first)
    del prefs["seed"]
    outs = {run(capsys, "synthesize", "--props", "p", "--prefs", json.dumps(prefs))[1] for _ in range(3)}
    assert len(outs) == 1


def test_oracles_from_cli(capsys):
    code, out, _ = run(capsys, "oracle", "truth-table", "--props", "p,q", "--formula", "p -> q")
    assert code == 0 and json.loads(out)["atoms"] == [1, 3, 4]
    code, out, _ = run(capsys, "oracle", "random-action", "--props", "p", "--seed", "1")
    assert code == 0 and json.loads(out)["depth"] <= 2
