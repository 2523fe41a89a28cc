"""Synthesis of a subjective expected utility representation at finite depth.

Pipeline: a preference order over a pool of actions is turned into a
state-dependent utility ``v(atom, entry)`` by exact linear feasibility; for
each atom the 0/1 system ``M x = |T^k| v`` (rows = normal-form entries,
columns = reachable olt states) is solved exactly, giving a utility ``u`` on
olt states. With the uniform prior on states ``(s, id)`` the expected utility
of every depth-k action equals its state-dependent score.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .actions import depth as action_depth
from .canonical import DoASeq, NoopEntry, canonical_map, enumerate_CA_minus
from .errors import DepthError, NotRepresentable
from .olt import Olt, count_olts, enumerate_olts, extensions, progress_of, progress_of_entry
from .simplex import INFEASIBLE, OPTIMAL, linprog


# -- state-dependent utilities ----------------------------------------------

@dataclass(frozen=True)
class StateDependentUtility:
    """``v(atom index, entry)``; pairs missing from ``table`` take ``default``."""

    k: int
    table: dict
    default: Fraction = Fraction(0)

    def __call__(self, atom, entry):
        return self.table.get((atom, entry), self.default)

    def score(self, cmap):
        """Sum over atoms of v(a, cmap(a))."""
        return sum((self(i, e) for i, e in enumerate(cmap.entries, 1)), Fraction(0))

    def values(self):
        vals = set(self.table.values())
        vals.add(self.default)
        return vals

    def normalized(self):
        """Affine image with range inside [0, 1]."""
        vals = self.values()
        lo, hi = min(vals), max(vals)
        if lo == hi:
            return StateDependentUtility(self.k, {key: Fraction(0) for key in self.table}, Fraction(0))
        span = hi - lo
        return StateDependentUtility(
            self.k, {key: (val - lo) / span for key, val in self.table.items()}, (self.default - lo) / span)

    def affine(self, scale, shift):
        return StateDependentUtility(
            self.k, {key: val * scale + shift for key, val in self.table.items()}, self.default * scale + shift)

    def materialize(self, lib, k=None, budget=None):
        """Explicit table over every atom and every entry of depth <= k."""
        k = self.k if k is None else k
        entries = enumerate_CA_minus(k, lib, budget)
        table = {(a, e): self(a, e) for a in range(1, lib.props.size + 1) for e in entries}
        return StateDependentUtility(k, table, self.default)

    def restrict(self, k, lib, budget=None):
        return self.materialize(lib, k, budget)


# -- the linear system behind a preference order ----------------------------

@dataclass
class PoolSystem:
    """Chain constraints ``score(first) - score(second) >= margin`` over the pool."""

    maps: list          # canonical map per pool index
    constraints: list   # (first index, second index, strict)
    coords: list        # (atom, entry) per variable
    rows: list          # sparse difference vectors, one per constraint


def pool_system(po, lib, k=None):
    k = pool_depth(po) if k is None else k
    for action in po.pool:
        if action_depth(action) > k:
            raise DepthError(f"pool action of depth {action_depth(action)} exceeds k={k}")
    maps = [canonical_map(a, lib) for a in po.pool]
    constraints = []
    groups = po.tier_groups()
    for g, members in enumerate(groups):
        for i, j in zip(members, members[1:]):
            constraints.append((i, j, False))
        if g + 1 < len(groups):
            constraints.append((members[-1], groups[g + 1][0], True))
    coord_index = {}
    coords = []
    rows = []
    for i, j, _ in constraints:
        row = {}
        for sign, cmap in ((1, maps[i]), (-1, maps[j])):
            for a, e in enumerate(cmap.entries, 1):
                key = (a, e)
                if key not in coord_index:
                    coord_index[key] = len(coords)
                    coords.append(key)
                c = coord_index[key]
                row[c] = row.get(c, 0) + sign
        rows.append({c: v for c, v in row.items() if v})
    return PoolSystem(maps, constraints, coords, rows)


def pool_depth(po):
    return max((action_depth(a) for a in po.pool), default=0)


def solve_state_dependent(po, lib, k=None, normalize=True):
    """A state-dependent utility reproducing ``po`` through per-atom sums.

    Ties get equal sums and strict preferences a sum difference of at least 1
    (before the optional normalization to [0, 1]). Raises
    :class:`NotRepresentable` carrying Farkas multipliers when no such
    utility exists.
    """
    k = pool_depth(po) if k is None else k
    system = pool_system(po, lib, k)
    margins = [1 if strict else 0 for _, _, strict in system.constraints]
    target = _target_differences(system, margins)
    if target is None:
        raise NotRepresentable("preference order admits no state-dependent utility",
                               farkas_multipliers(system))
    solution = linalg.solve(system.rows, target)
    table = {system.coords[c]: Fraction(0) for c in range(len(system.coords))}
    for c, val in solution.items():
        table[system.coords[c]] = val
    v = StateDependentUtility(k, table)
    return v.normalized() if normalize else v


def _target_differences(system, margins):
    """Differences z in the column space of the system with z = 0 on ties, z >= margin on strict rows."""
    kernel = linalg.left_kernel(system.rows)
    strict = [i for i, m in enumerate(margins) if m]
    z = [Fraction(m) for m in margins]
    if not kernel:
        return z
    # z_i = margin_i + w_i with w >= 0 on strict rows; kernel . z = 0
    A = [[y.get(i, 0) for i in strict] for y in kernel]
    b = [-sum(y.get(i, 0) * margins[i] for i in strict) for y in kernel]
    if not strict:
        return z if all(bi == 0 for bi in b) else None
    res = linprog([1] * len(strict), A, b)
    if res.status != OPTIMAL:
        return None
    for i, w in zip(strict, res.x):
        z[i] += w
    return z


def farkas_multipliers(system):
    """Nonnegative weights on oriented pool pairs whose difference vectors cancel.

    Returns ``[(first, second, strict, weight)]`` with positive weights and
    total strict weight 1, or None if the pool system is feasible.
    """
    pairs = []
    for i, j, strict in system.constraints:
        pairs.append((i, j, strict))
        if not strict:
            pairs.append((j, i, False))
    n_coords = len(system.coords)
    cols = []
    for i, j, strict in pairs:
        col = [0] * n_coords
        for a, e in enumerate(system.maps[i].entries, 1):
            col[system.coords.index((a, e))] += 1
        for a, e in enumerate(system.maps[j].entries, 1):
            col[system.coords.index((a, e))] -= 1
        cols.append(col)
    A = [[cols[p][c] for p in range(len(pairs))] for c in range(n_coords)]
    A.append([1 if strict else 0 for _, _, strict in pairs])
    b = [0] * n_coords + [1]
    res = linprog([1] * len(pairs), A, b)
    if res.status == INFEASIBLE:
        return None
    return [(i, j, strict, w) for (i, j, strict), w in zip(pairs, res.x) if w]


# -- the per-atom matrix system ---------------------------------------------

@dataclass
class MatrixSystem:
    atom: int
    k: int
    rows: tuple         # entries of CA^{k,-}
    olts: tuple         # T^k_a
    columns: tuple      # (olt position, ProgressFunction)
    row_columns: tuple  # per row, the column hit in each olt
    n_olts_total: int   # |T^k|

    def sparse_rows(self):
        return [{c: 1 for c in cols} for cols in self.row_columns]

    def dense(self):
        out = []
        for cols in self.row_columns:
            row = [0] * len(self.columns)
            for c in cols:
                row[c] = 1
            out.append(row)
        return out

    @cached_property
    def column_index(self):
        return {col: i for i, col in enumerate(self.columns)}


def build_matrix(atom, k, lib, budget=None):
    entries = enumerate_CA_minus(k, lib, budget)
    olts = enumerate_olts(k, lib.props, root_atom=atom, budget=budget)
    col_index = {}
    columns = []
    row_columns = []
    for entry in entries:
        hit = []
        for pos, s in enumerate(olts):
            key = (pos, progress_of_entry(entry, s))
            c = col_index.get(key)
            if c is None:
                c = col_index[key] = len(columns)
                columns.append(key)
            hit.append(c)
        row_columns.append(tuple(hit))
    return MatrixSystem(atom, k, tuple(entries), tuple(olts), tuple(columns),
                        tuple(row_columns), count_olts(k, lib.props.size))


@dataclass(frozen=True)
class Independence:
    rank: int
    n_rows: int
    combination: dict = None  # row index -> coefficient, when dependent

    @property
    def ok(self):
        return self.rank == self.n_rows


def verify_independence(ms_or_rows):
    rows = ms_or_rows.sparse_rows() if isinstance(ms_or_rows, MatrixSystem) else list(ms_or_rows)
    dep = linalg.dependency(rows)
    return Independence(linalg.rank(rows), len(rows), dep)


# -- the order on entries and witness trees ---------------------------------

def dominates(x, y):
    """Strict order on normal-form entries used by the independence argument.

    noop is below everything else. Otherwise compare first-step atom sets by
    strict inclusion; with equal sets, a continuation beats none, and two
    continuations compare atomwise (dominating or equal at every atom).
    """
    if x == y:
        return False
    if isinstance(y, NoopEntry):
        return True
    if isinstance(x, NoopEntry):
        return False
    ax, ay = set(x.atoms), set(y.atoms)
    if ax > ay:
        return True
    if ax != ay:
        return False
    rx = x.rest if isinstance(x, DoASeq) else None
    ry = y.rest if isinstance(y, DoASeq) else None
    if ry is None:
        return rx is not None
    if rx is None:
        return False
    return all(ex == ey or dominates(ex, ey) for ex, ey in zip(rx.entries, ry.entries))


def witness_tree(entry, k, size, root_atom):
    """An olt on which ``entry``'s progress function is shared only by entries it dominates.

    The root order ends with the first-step atoms, smallest index first; for
    continuations, each child's subtree reuses the witness orders of the
    continuation's entry at that child's label.
    """
    if isinstance(entry, NoopEntry):
        raise ValueError("noop needs no witness tree")
    if entry.depth > k:
        raise DepthError(f"entry of depth {entry.depth} in a {k}-olt")
    orders = {}
    _witness_orders(entry, (), size, orders)
    return Olt.from_orders(size, k, root_atom, orders)


def _witness_orders(entry, base, size, orders):
    if isinstance(entry, NoopEntry):
        return
    A = list(entry.atoms)
    others = [x for x in range(1, size + 1) if x not in entry.atoms]
    orders[base] = tuple(others + A)
    if isinstance(entry, DoASeq):
        for x in range(1, size + 1):
            _witness_orders(entry.rest[x], base + (x,), size, orders)


def witness_collisions(entry, ms):
    """Rows of ``ms`` with the same progress function as ``entry`` on its witness tree."""
    s = witness_tree(entry, ms.k, len(ms.olts[0].order_at(())), ms.atom)
    g = progress_of_entry(entry, s)
    return [other for other in ms.rows if other != entry and progress_of_entry(other, s) == g]


def witness_guarantee(entry, ms):
    """True iff every colliding row on the witness tree is dominated by ``entry``."""
    return all(dominates(entry, other) for other in witness_collisions(entry, ms))


# -- utilities on olt states ------------------------------------------------

def solve_utilities(v, atom, lib, ms=None, budget=None):
    """Exact solution of M x = |T^k| v(atom, .) with unused columns at zero.

    Returns ``{(olt, progress): value}`` for the nonzero values.
    """
    ms = ms or build_matrix(atom, v.k, lib, budget)
    rhs = [ms.n_olts_total * v(atom, entry) for entry in ms.rows]
    try:
        x = linalg.solve(ms.sparse_rows(), rhs)
    except linalg.Inconsistent:
        raise ArithmeticError(f"utility system for atom {atom} is inconsistent") from None
    out = {}
    for c, val in x.items():
        pos, g = ms.columns[c]
        out[(ms.olts[pos], g)] = val
    return out


@dataclass
class Representation:
    """Olt state space of depth k with uniform prior on (s, id) and utility ``u``."""

    k: int
    lib: object
    n_olts: int
    u: dict = field(default_factory=dict)
    v: StateDependentUtility = None

    def prob(self, state):
        return Fraction(1, self.n_olts) if state.progress.is_identity else Fraction(0)

    def utility(self, olt, progress):
        return self.u.get((olt, progress), Fraction(0))

    def olts(self, budget=None):
        return enumerate_olts(self.k, self.lib.props, budget=budget)


def assemble(v, lib, budget=None, check=True):
    u = {}
    for atom in range(1, lib.props.size + 1):
        ms = build_matrix(atom, v.k, lib, budget)
        if check:
            ind = verify_independence(ms)
            if not ind.ok:
                raise ArithmeticError(f"rows for atom {atom} are dependent (rank {ind.rank} < {ind.n_rows})")
        u.update(solve_utilities(v, atom, lib, ms))
    return Representation(v.k, lib, count_olts(v.k, lib.props.size), u, v)


def expected_utility(rep, action, budget=None):
    """Sum over olts s of Pr(s, id) * u(f_action(s, id))."""
    if action_depth(action) > rep.k:
        raise DepthError(f"action of depth {action_depth(action)} exceeds representation depth {rep.k}")
    total = Fraction(0)
    for s in rep.olts(budget):
        total += rep.utility(s, progress_of(action, s, rep.lib))
    return total / rep.n_olts


def verify_representation(rep, po, budget=None):
    """None if expected utility orders the pool exactly as ``po``; else a violating pair."""
    eu = [expected_utility(rep, a, budget) for a in po.pool]
    for i, a in enumerate(po.pool):
        for j, b in enumerate(po.pool):
            if po.weakly_prefers(a, b) != (eu[i] >= eu[j]):
                return (a, b)
    return None


def synthesize(po, lib, k=None, budget=None):
    v = solve_state_dependent(po, lib, k)
    return assemble(v, lib, budget)


def check_utility_equation(rep, budget=None):
    """(atom, entry) pairs where sum over T^k_a of u(s, g) differs from |T^k| v(a, entry)."""
    bad = []
    for atom in range(1, rep.lib.props.size + 1):
        olts = enumerate_olts(rep.k, rep.lib.props, root_atom=atom, budget=budget)
        for entry in enumerate_CA_minus(rep.k, rep.lib, budget):
            lhs = sum((rep.utility(s, progress_of_entry(entry, s)) for s in olts), Fraction(0))
            if lhs != rep.n_olts * rep.v(atom, entry):
                bad.append((atom, entry))
    return bad


# -- compatibility across depths --------------------------------------------

def stitch_v(vs, lib, budget=None):
    """A v-compatible family for depths 1..K from utilities ``vs`` (depth k at ``vs[k-1]``).

    The deepest utility already orders every shallower pool, so each depth k
    takes its restriction to entries of depth <= k; agreement on shared
    entries then holds by construction. Only ``vs[-1]`` is consulted.
    """
    if not vs:
        return []
    top = vs[-1]
    return [top.restrict(k, lib, budget) for k in range(1, top.k + 1)]


class CompatibleUtility:
    """Utility on depth-k olt states that defers to depth k-1 on (k-1)-bounded states."""

    def __init__(self, k, base, previous=None):
        self.k = k
        self.base = base
        self.previous = previous

    def __call__(self, olt, progress):
        if self.previous is not None and progress.is_bounded(self.k - 1):
            return self.previous(olt.project(self.k - 1), progress.project(self.k - 1))
        return self.base.get((olt, progress), Fraction(0))

    def get(self, key, default=None):
        return self(*key)


def stitch_u(us):
    """u-compatible family from per-depth utility tables ``us[k-1]`` (depths 1..K)."""
    out = []
    for k, table in enumerate(us, 1):
        out.append(CompatibleUtility(k, table, out[-1] if out else None))
    return out


def pr_uniform(k, olt):
    return Fraction(1, count_olts(k, olt.size))


def check_pr_compatibility(K, size, pr=pr_uniform, budget=None):
    """None if, for all k < k' <= K, Pr^k(s, id) equals the Pr^{k'} mass of its extensions."""
    for k in range(1, K + 1):
        for s in enumerate_olts(k, size, budget=budget):
            for k2 in range(k + 1, K + 1):
                mass = sum((pr(k2, t) for t in extensions(s, k2)), Fraction(0))
                if mass != pr(k, s):
                    return (k, k2, s, pr(k, s), mass)
    return None


__all__ = [
    "StateDependentUtility", "PoolSystem", "pool_system", "solve_state_dependent",
    "farkas_multipliers", "MatrixSystem", "build_matrix", "Independence",
    "verify_independence", "dominates", "witness_tree", "witness_collisions",
    "witness_guarantee", "solve_utilities", "Representation", "assemble",
    "expected_utility", "verify_representation", "synthesize", "check_utility_equation",
    "stitch_v", "stitch_u", "CompatibleUtility", "check_pr_compatibility",
]
