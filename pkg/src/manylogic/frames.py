"""Frame properties, axiom-schema checking by valuation sweep, and the
collected frame-correspondence results.

Schema checks enumerate every valuation of every (relation, logic
assignment) frame at a given world count.  The sweep is vectorised with
numpy over a joint (assignment, valuation) axis so that exhaustive runs
over all three-world frames stay in seconds; counterexamples are handed
back as ordinary models that replay through the normal evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from random import Random

import numpy as np

from . import syntax
from .logics import LOGIC_IDS, LOGICS
from .models import Frame, Model
from .syntax import Bottom, Box, Diamond, Formula, Imp, Neg, parse
from .values import Value

DEFAULT_SEED = 0


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class FrameProperties:
    reflexive: bool
    transitive: bool
    euclidean: bool
    symmetric: bool
    serial: bool


def frame_properties(frame: Frame) -> FrameProperties:
    worlds, rel = frame.worlds, frame.relation
    reflexive = all((w, w) in rel for w in worlds)
    transitive = all(
        (a, d) in rel for a, b in rel for c, d in rel if b == c
    )
    euclidean = all(
        (b, d) in rel for a, b in rel for c, d in rel if a == c
    )
    symmetric = all((b, a) in rel for a, b in rel)
    serial = all(any((w, u) in rel for u in worlds) for w in worlds)
    return FrameProperties(reflexive, transitive, euclidean, symmetric, serial)


@dataclass(frozen=True)
class AxiomSchema:
    id: str
    template: Formula
    atoms: tuple[str, ...]


def _schema(sid: str, text: str) -> AxiomSchema:
    f = parse(text)
    return AxiomSchema(sid, f, tuple(sorted(syntax.atoms(f))))


SCHEMAS: dict[str, AxiomSchema] = {
    "K": _schema("K", "[](p -> q) -> ([]p -> []q)"),
    "T": _schema("T", "[]p -> p"),
    "4": _schema("4", "[]p -> [][]p"),
    "5": _schema("5", "<>p -> []<>p"),
    "5c": _schema("5c", "<>~p -> []<>~p"),
    "B": _schema("B", "p -> []<>p"),
    "D": _schema("D", "[]p -> <>p"),
}


@dataclass(frozen=True)
class CheckBudget:
    mode: str = "exhaustive"  # "exhaustive" | "sampled"
    sample_count: int = 10000
    atoms: int = 1
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class Counterexample:
    model: Model
    world: str
    value: Value


@dataclass(frozen=True)
class CheckResult:
    valid: bool
    counterexample: Counterexample | None
    frames_checked: int
    models_checked: int


# ---------------------------------------------------------------- tables

_N_LOGIC = len(LOGIC_IDS)
_LOGIC_INDEX = {lid: i for i, lid in enumerate(LOGIC_IDS)}

ELEMENT_CODES = [
    np.array([int(v) for v in LOGICS[lid].lattice.elements], dtype=np.int8)
    for lid in LOGIC_IDS
]

def _fill_tables():
    meet = np.full((_N_LOGIC, 6, 6), -1, dtype=np.int8)
    join = np.full((_N_LOGIC, 6, 6), -1, dtype=np.int8)
    imp = np.full((_N_LOGIC, 6, 6), -1, dtype=np.int8)
    circ = np.full((_N_LOGIC, 6), -1, dtype=np.int8)
    neg = np.zeros(6, dtype=np.int8)
    down = np.zeros((_N_LOGIC, 6), dtype=np.int8)
    up = np.zeros((_N_LOGIC, 6), dtype=np.int8)
    desig = np.zeros((_N_LOGIC, 6), dtype=bool)
    top = np.zeros(_N_LOGIC, dtype=np.int8)
    bot = np.zeros(_N_LOGIC, dtype=np.int8)
    from .logics import apply

    letk = LOGICS["LETK"]
    for x in Value:
        neg[int(x)] = int(apply(letk, "neg", [x]))
    for li, lid in enumerate(LOGIC_IDS):
        logic = LOGICS[lid]
        lat = logic.lattice
        top[li], bot[li] = int(lat.top), int(lat.bottom)
        for x in Value:
            down[li][int(x)] = int(lat.down(x))
            up[li][int(x)] = int(lat.up(x))
        for x in lat.elements:
            circ[li][int(x)] = int(apply(logic, "circ", [x]))
            desig[li][int(x)] = logic.is_designated(x)
            for y in lat.elements:
                meet[li][int(x)][int(y)] = int(lat.meet(x, y))
                join[li][int(x)][int(y)] = int(lat.join(x, y))
                imp[li][int(x)][int(y)] = int(apply(logic, "imp", [x, y]))
    return meet, join, imp, circ, neg, down, up, desig, top, bot


MEET_T, JOIN_T, IMP_T, CIRC_T, NEG_T, DOWN_T, UP_T, DESIG_T, TOP_T, BOT_T = _fill_tables()

_PY_MEET = MEET_T.tolist()
_PY_JOIN = JOIN_T.tolist()
_PY_IMP = IMP_T.tolist()
_PY_CIRC = CIRC_T.tolist()
_PY_NEG = NEG_T.tolist()
_PY_DOWN = DOWN_T.tolist()
_PY_UP = UP_T.tolist()
_PY_DESIG = DESIG_T.tolist()
_PY_TOP = TOP_T.tolist()
_PY_BOT = BOT_T.tolist()
_PY_ELEMENTS = [codes.tolist() for codes in ELEMENT_CODES]


# ------------------------------------------------------------- programs

def _resolve(f: Formula, variant: str) -> Formula:
    """Replace diamonds with their negation rewrites when requested."""
    if isinstance(f, Diamond):
        child = _resolve(f.child, variant)
        if variant == "negbox":
            return Neg(Box(Neg(child)))
        if variant == "cnegbox":
            return Imp(Box(Imp(child, Bottom())), Bottom())
        return Diamond(child)
    kids = tuple(_resolve(c, variant) for c in syntax.children(f))
    return type(f)(*kids) if kids else f


def compile_program(f: Formula, variant: str, atom_names: tuple[str, ...]):
    """Postfix program over value codes; shared subformulas are de-duplicated."""
    if variant not in ("up", "down", "negbox", "cnegbox"):
        raise BudgetError(f"unknown diamond variant {variant!r}")
    f = _resolve(syntax.desugar(f), variant)
    dia_kind = "dia_up" if variant != "down" else "dia_down"
    index: dict[Formula, int] = {}
    prog: list[tuple] = []

    def emit(g: Formula) -> int:
        if g in index:
            return index[g]
        if isinstance(g, syntax.Atom):
            node = ("atom", atom_names.index(g.name))
        elif isinstance(g, Bottom):
            node = ("bottom",)
        elif isinstance(g, Neg):
            node = ("neg", emit(g.child))
        elif isinstance(g, syntax.Circ):
            node = ("circ", emit(g.child))
        elif isinstance(g, syntax.And):
            node = ("and", emit(g.left), emit(g.right))
        elif isinstance(g, syntax.Or):
            node = ("or", emit(g.left), emit(g.right))
        elif isinstance(g, Imp):
            node = ("imp", emit(g.left), emit(g.right))
        elif isinstance(g, Box):
            node = ("box", emit(g.child))
        elif isinstance(g, Diamond):
            node = (dia_kind, emit(g.child))
        else:
            raise BudgetError(f"cannot compile {type(g).__name__}")
        prog.append(node)
        index[g] = len(prog) - 1
        return index[g]

    emit(f)
    return prog


def _eval_vec(prog, succs, lat, vals):
    """Evaluate a program over numpy value-code arrays, one per world."""
    return _eval_slots(prog, succs, lat, vals)[-1]


def _eval_slots(prog, succs, lat, vals):
    n = len(lat)
    slots = []
    for node in prog:
        kind = node[0]
        if kind == "atom":
            row = [vals[node[1]][w] for w in range(n)]
        elif kind == "bottom":
            row = [BOT_T[lat[w]] for w in range(n)]
        elif kind == "neg":
            ch = slots[node[1]]
            row = [NEG_T[ch[w]] for w in range(n)]
        elif kind == "circ":
            ch = slots[node[1]]
            row = [CIRC_T[lat[w], ch[w]] for w in range(n)]
        elif kind in ("and", "or", "imp"):
            tbl = {"and": MEET_T, "or": JOIN_T, "imp": IMP_T}[kind]
            l, r = slots[node[1]], slots[node[2]]
            row = [tbl[lat[w], l[w], r[w]] for w in range(n)]
        elif kind == "box":
            ch = slots[node[1]]
            row = []
            for w in range(n):
                ss = succs[w]
                if not ss:
                    row.append(TOP_T[lat[w]])
                    continue
                acc = DOWN_T[lat[w], ch[ss[0]]]
                for u in ss[1:]:
                    acc = MEET_T[lat[w], acc, DOWN_T[lat[w], ch[u]]]
                row.append(acc)
        else:  # dia_up / dia_down
            interp = UP_T if kind == "dia_up" else DOWN_T
            ch = slots[node[1]]
            row = []
            for w in range(n):
                ss = succs[w]
                if not ss:
                    row.append(BOT_T[lat[w]])
                    continue
                acc = interp[lat[w], ch[ss[0]]]
                for u in ss[1:]:
                    acc = JOIN_T[lat[w], acc, interp[lat[w], ch[u]]]
                row.append(acc)
        slots.append(row)
    return slots


def _eval_single(prog, succs, lat, vals):
    """Same program on plain ints: lat is a logic-index list, vals[a][w]."""
    n = len(lat)
    slots = []
    for node in prog:
        kind = node[0]
        if kind == "atom":
            row = [vals[node[1]][w] for w in range(n)]
        elif kind == "bottom":
            row = [_PY_BOT[lat[w]] for w in range(n)]
        elif kind == "neg":
            ch = slots[node[1]]
            row = [_PY_NEG[ch[w]] for w in range(n)]
        elif kind == "circ":
            ch = slots[node[1]]
            row = [_PY_CIRC[lat[w]][ch[w]] for w in range(n)]
        elif kind in ("and", "or", "imp"):
            tbl = {"and": _PY_MEET, "or": _PY_JOIN, "imp": _PY_IMP}[kind]
            l, r = slots[node[1]], slots[node[2]]
            row = [tbl[lat[w]][l[w]][r[w]] for w in range(n)]
        elif kind == "box":
            ch = slots[node[1]]
            row = []
            for w in range(n):
                ss = succs[w]
                if not ss:
                    row.append(_PY_TOP[lat[w]])
                    continue
                acc = _PY_DOWN[lat[w]][ch[ss[0]]]
                for u in ss[1:]:
                    acc = _PY_MEET[lat[w]][acc][_PY_DOWN[lat[w]][ch[u]]]
                row.append(acc)
        else:
            interp = _PY_UP if kind == "dia_up" else _PY_DOWN
            ch = slots[node[1]]
            row = []
            for w in range(n):
                ss = succs[w]
                if not ss:
                    row.append(_PY_BOT[lat[w]])
                    continue
                acc = interp[lat[w]][ch[ss[0]]]
                for u in ss[1:]:
                    acc = _PY_JOIN[lat[w]][acc][interp[lat[w]][ch[u]]]
                row.append(acc)
        slots.append(row)
    return slots[-1]


# ----------------------------------------------------------------- axes

@dataclass(frozen=True)
class _Axis:
    blocks: tuple  # (interp indices, start, end)
    lat: tuple  # per world: int8 array over the axis
    vals: tuple  # vals[a][w]: int8 array over the axis


def _build_axis(n_worlds: int, logic_indices, atoms: int) -> _Axis:
    blocks, lat_parts, val_parts = [], [[] for _ in range(n_worlds)], None
    val_parts = [[[] for _ in range(n_worlds)] for _ in range(atoms)]
    start = 0
    for interp in product(logic_indices, repeat=n_worlds):
        dims = [ELEMENT_CODES[interp[w]] for _ in range(atoms) for w in range(n_worlds)]
        count = int(np.prod([d.size for d in dims]))
        grids = np.meshgrid(*dims, indexing="ij") if dims else []
        flat = [g.reshape(-1).astype(np.int8) for g in grids]
        k = 0
        for a in range(atoms):
            for w in range(n_worlds):
                val_parts[a][w].append(flat[k])
                k += 1
        for w in range(n_worlds):
            lat_parts[w].append(np.full(count, interp[w], dtype=np.int8))
        blocks.append((interp, start, start + count))
        start += count
    lat = tuple(np.concatenate(parts) for parts in lat_parts)
    vals = tuple(
        tuple(np.concatenate(val_parts[a][w]) for w in range(n_worlds))
        for a in range(atoms)
    )
    return _Axis(tuple(blocks), lat, vals)


def _relations(n: int):
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for mask in range(1 << len(pairs)):
        rel = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        yield rel


def _succs(rel, n: int):
    return [tuple(j for j in range(n) if (i, j) in rel) for i in range(n)]


def _rel_props(rel, n: int) -> FrameProperties:
    worlds = tuple(f"w{i + 1}" for i in range(n))
    return frame_properties(
        Frame(worlds, frozenset((worlds[i], worlds[j]) for i, j in rel), {})
    )


def _witness_model(n, rel, interp, vals, j, atom_names, variant) -> Model:
    worlds = tuple(f"w{i + 1}" for i in range(n))
    relation = frozenset((worlds[i], worlds[k]) for i, k in rel)
    logics = {worlds[w]: LOGIC_IDS[interp[w]] for w in range(n)}
    valuation = {
        worlds[w]: {atom_names[a]: Value(int(vals[a][w][j])) for a in range(len(atom_names))}
        for w in range(n)
    }
    return Model(worlds, relation, logics, valuation, variant)


def _designated_all_worlds(root, lat):
    ok = DESIG_T[lat[0], root[0]]
    for w in range(1, len(lat)):
        ok = ok & DESIG_T[lat[w], root[w]]
    return ok


@dataclass(frozen=True)
class SweepOutcome:
    frames_checked: int
    models_checked: int
    counterexamples: tuple[Counterexample, ...]


def sweep_schema(
    schema: AxiomSchema,
    n_worlds: int,
    logic_ids,
    variant: str = "up",
    relation_pred=None,
    max_counterexamples: int = 1,
) -> SweepOutcome:
    """Exhaustively check a schema over every (relation, logic assignment,
    valuation) at a fixed world count; deterministic order, first
    counterexamples are minimal in that order."""
    if n_worlds > 3:
        raise BudgetError("exhaustive sweeps are limited to 3 worlds")
    logic_indices = [_LOGIC_INDEX[lid] for lid in logic_ids]
    axis = _build_axis(n_worlds, logic_indices, len(schema.atoms))
    prog = compile_program(schema.template, variant, schema.atoms)
    frames = models = 0
    bad: list[Counterexample] = []
    for rel in _relations(n_worlds):
        if relation_pred is not None and not relation_pred(_rel_props(rel, n_worlds)):
            continue
        succs = _succs(rel, n_worlds)
        root = _eval_vec(prog, succs, axis.lat, axis.vals)
        ok = _designated_all_worlds(root, axis.lat)
        for interp, start, end in axis.blocks:
            frames += 1
            models += end - start
            if ok[start:end].all():
                continue
            if len(bad) >= max_counterexamples:
                continue
            j = start + int(np.argmin(ok[start:end]))
            for w in range(n_worlds):
                if not DESIG_T[axis.lat[w][j], root[w][j]]:
                    model = _witness_model(
                        n_worlds, rel, interp, axis.vals, j, schema.atoms, variant
                    )
                    bad.append(
                        Counterexample(model, f"w{w + 1}", Value(int(root[w][j])))
                    )
                    break
    return SweepOutcome(frames, models, tuple(bad))


def sample_schema(
    schema: AxiomSchema,
    n_worlds: int,
    logic_ids,
    variant: str = "up",
    samples: int = 10000,
    seed: int = DEFAULT_SEED,
    relation_transform=None,
    max_counterexamples: int = 1,
) -> SweepOutcome:
    """Randomised schema check: each sample draws a relation (optionally
    closed by relation_transform), a logic per world, and a valuation."""
    rng = Random(seed)
    logic_indices = [_LOGIC_INDEX[lid] for lid in logic_ids]
    prog = compile_program(schema.template, variant, schema.atoms)
    pairs = [(i, j) for i in range(n_worlds) for j in range(n_worlds)]
    bad: list[Counterexample] = []
    for _ in range(samples):
        rel = frozenset(p for p in pairs if rng.random() < 0.5)
        if relation_transform is not None:
            rel = relation_transform(rel, n_worlds)
        succs = _succs(rel, n_worlds)
        lat = [rng.choice(logic_indices) for _ in range(n_worlds)]
        vals = [
            [rng.choice(_PY_ELEMENTS[lat[w]]) for w in range(n_worlds)]
            for _ in range(len(schema.atoms))
        ]
        root = _eval_single(prog, succs, lat, vals)
        for w in range(n_worlds):
            if not _PY_DESIG[lat[w]][root[w]]:
                if len(bad) < max_counterexamples:
                    rel_named = rel
                    model = _witness_model(
                        n_worlds,
                        rel_named,
                        tuple(lat),
                        [[np.array([v]) for v in row] for row in vals],
                        0,
                        schema.atoms,
                        variant,
                    )
                    bad.append(Counterexample(model, f"w{w + 1}", Value(root[w])))
                break
    return SweepOutcome(samples, samples, tuple(bad))


def reflexive_closure(rel, n):
    return frozenset(rel) | frozenset((i, i) for i in range(n))


def transitive_closure(rel, n):
    rel = set(rel)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return frozenset(rel)


def axiom_valid_on_frame(
    frame: Frame, schema: AxiomSchema, variant: str = "up", budget: CheckBudget | None = None
) -> CheckResult:
    """Check one schema on one concrete frame; exhaustive (<= 3 worlds) or
    sampled valuations."""
    budget = budget or CheckBudget()
    if budget.atoms < len(schema.atoms):
        raise BudgetError(f"schema {schema.id} needs {len(schema.atoms)} atoms")
    n = len(frame.worlds)
    windex = {w: i for i, w in enumerate(frame.worlds)}
    rel = frozenset((windex[u], windex[v]) for u, v in frame.relation)
    succs = _succs(rel, n)
    interp = tuple(_LOGIC_INDEX[frame.logics[w]] for w in frame.worlds)
    prog = compile_program(schema.template, variant, schema.atoms)
    models = 0

    def witness(vals, j, root):
        for w in range(n):
            if not DESIG_T[interp[w], root[w][j]]:
                worlds = frame.worlds
                valuation = {
                    worlds[k]: {
                        schema.atoms[a]: Value(int(vals[a][k][j]))
                        for a in range(len(schema.atoms))
                    }
                    for k in range(n)
                }
                model = Model(worlds, frame.relation, dict(frame.logics), valuation, variant)
                return Counterexample(model, worlds[w], Value(int(root[w][j])))
        raise AssertionError("no failing world in witness")

    if budget.mode == "exhaustive":
        if n > 3:
            raise BudgetError("exhaustive mode is limited to 3 worlds")
        axis = _build_axis(n, list(interp), len(schema.atoms))
        # single interpretation: keep only its block
        target = [blk for blk in axis.blocks if blk[0] == interp]
        start, end = target[0][1], target[0][2]
        vals = tuple(tuple(col[start:end] for col in row) for row in axis.vals)
        lat = tuple(col[start:end] for col in axis.lat)
        root = _eval_vec(prog, succs, lat, vals)
        ok = _designated_all_worlds(root, lat)
        models = end - start
        if ok.all():
            return CheckResult(True, None, 1, models)
        j = int(np.argmin(ok))
        return CheckResult(False, witness(vals, j, root), 1, models)

    rng = Random(budget.seed)
    k = budget.sample_count
    vals = tuple(
        tuple(
            np.array(
                [rng.choice(_PY_ELEMENTS[interp[w]]) for _ in range(k)], dtype=np.int8
            )
            for w in range(n)
        )
        for _ in range(len(schema.atoms))
    )
    lat = tuple(np.full(k, interp[w], dtype=np.int8) for w in range(n))
    root = _eval_vec(prog, succs, lat, vals)
    ok = _designated_all_worlds(root, lat)
    if ok.all():
        return CheckResult(True, None, 1, k)
    j = int(np.argmin(ok))
    return CheckResult(False, witness(vals, j, root), 1, k)


# ------------------------------------------------- characterisation runs

@dataclass(frozen=True)
class FiveCReport:
    logic_ids: tuple[str, ...]
    frames_checked: int
    models_checked: int
    euclidean_failures: tuple[Counterexample, ...]  # euclidean frame, schema fails
    non_euclidean_valid: tuple[str, ...]  # non-euclidean frame, no countermodel
    window_violations: int  # modal ~A stacks that left {T,T0,F0,F}

    @property
    def characterization_holds(self) -> bool:
        return not (self.euclidean_failures or self.non_euclidean_valid)


_CLASSICAL_WINDOW = np.zeros(6, dtype=bool)
for _v in (Value.T, Value.T0, Value.F0, Value.F):
    _CLASSICAL_WINDOW[int(_v)] = True


def five_c_characterization(
    logic_ids, max_worlds: int = 3, max_counterexamples: int = 3
) -> FiveCReport:
    """Both directions of "frame satisfies 5c iff relation is Euclidean",
    exhaustively over every frame with up to max_worlds worlds.

    The modal stack values over ~p are also checked against the classical
    window {T, T0, F0, F}; over lattices whose interpretation maps leave
    that window the count comes back nonzero and the characterization is
    expected to fail (see the ledger).
    """
    schema = SCHEMAS["5c"]
    logic_indices = [_LOGIC_INDEX[lid] for lid in logic_ids]
    frames = models = 0
    failures: list[Counterexample] = []
    silently_valid: list[str] = []
    window_violations = 0
    for n in range(1, max_worlds + 1):
        axis = _build_axis(n, logic_indices, 1)
        prog = compile_program(schema.template, "up", schema.atoms)
        modal_nodes = [i for i, node in enumerate(prog) if node[0] in ("box", "dia_up")]
        for rel in _relations(n):
            succs = _succs(rel, n)
            eu = _rel_props(rel, n).euclidean
            slots = _eval_slots(prog, succs, axis.lat, axis.vals)
            root = slots[-1]
            for i in modal_nodes:
                for w in range(n):
                    window_violations += int((~_CLASSICAL_WINDOW[slots[i][w]]).sum())
            ok = _designated_all_worlds(root, axis.lat)
            for interp, start, end in axis.blocks:
                frames += 1
                models += end - start
                frame_ok = bool(ok[start:end].all())
                if eu and not frame_ok:
                    if len(failures) < max_counterexamples:
                        j = start + int(np.argmin(ok[start:end]))
                        for w in range(n):
                            if not DESIG_T[axis.lat[w][j], root[w][j]]:
                                failures.append(
                                    Counterexample(
                                        _witness_model(
                                            n, rel, interp, axis.vals, j, schema.atoms, "up"
                                        ),
                                        f"w{w + 1}",
                                        Value(int(root[w][j])),
                                    )
                                )
                                break
                elif not eu and frame_ok:
                    rel_text = ",".join(f"w{i+1}->w{j+1}" for i, j in sorted(rel))
                    logic_text = ",".join(LOGIC_IDS[i] for i in interp)
                    silently_valid.append(f"[{rel_text or 'empty'}] logics {logic_text}")
    return FiveCReport(
        tuple(logic_ids),
        frames,
        models,
        tuple(failures),
        tuple(silently_valid),
        window_violations,
    )


@dataclass(frozen=True)
class DualityReport:
    mismatches: tuple[str, ...]
    models_checked: int

    @property
    def holds(self) -> bool:
        return not self.mismatches


DUALITY_CORPUS = (
    "p", "!p", "@p", "~p", "Np", "#",
    "p & !p", "p | ~p", "p -> !p", "!@p", "[]p", "<>p",
)


def duality_check(
    logic_ids=LOGIC_IDS,
    n_worlds: int = 2,
    corpus=DUALITY_CORPUS,
    variant: str = "up",
    max_mismatches: int = 5,
) -> DualityReport:
    """Value-level identity diamond A == !box!A on every model at the given
    world count, for every corpus formula."""
    logic_indices = [_LOGIC_INDEX[lid] for lid in logic_ids]
    axis = _build_axis(n_worlds, logic_indices, 1)
    mismatches: list[str] = []
    models = 0
    for text in corpus:
        body = parse(text)
        lhs = compile_program(Diamond(body), variant, ("p",))
        rhs = compile_program(Neg(Box(Neg(body))), variant, ("p",))
        for rel in _relations(n_worlds):
            succs = _succs(rel, n_worlds)
            a = _eval_vec(lhs, succs, axis.lat, axis.vals)
            c = _eval_vec(rhs, succs, axis.lat, axis.vals)
            models += axis.lat[0].size
            for w in range(n_worlds):
                same = a[w] == c[w]
                if not same.all():
                    if len(mismatches) < max_mismatches:
                        j = int(np.argmin(same))
                        mismatches.append(
                            f"A={text} rel={sorted(rel)} world=w{w + 1} "
                            f"<>A={Value(int(a[w][j]))} !box!A={Value(int(c[w][j]))}"
                        )
    return DualityReport(tuple(mismatches), models)


# -------------------------------------------------------------- the suite

@dataclass(frozen=True)
class SuiteItem:
    name: str
    description: str
    frames_checked: int
    models_checked: int
    counterexamples: tuple
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class SuiteReport:
    items: tuple[SuiteItem, ...]
    seed: int

    @property
    def all_pass(self) -> bool:
        return all(item.passed for item in self.items)


def describe_counterexample(ce: Counterexample) -> str:
    from .models import model_to_dict
    import json

    return f"world={ce.world} value={ce.value} model={json.dumps(model_to_dict(ce.model))}"


def theorem_suite(
    logic_ids=LOGIC_IDS,
    five_c_logic_ids=("FDE", "K3", "LP", "LJ4", "CLW"),
    samples: int = 2000,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """The collected frame results: K everywhere, T on reflexive frames,
    4 on transitive frames, the Euclidean characterisation of 5c, duality,
    and observation-only runs for B and D."""
    items = []

    def outcome_pair(exh: SweepOutcome, samp: SweepOutcome):
        return (
            exh.frames_checked + samp.frames_checked,
            exh.models_checked + samp.models_checked,
            exh.counterexamples + samp.counterexamples,
        )

    k2 = sweep_schema(SCHEMAS["K"], 2, logic_ids)
    k1 = sweep_schema(SCHEMAS["K"], 1, logic_ids)
    k3 = sample_schema(SCHEMAS["K"], 3, logic_ids, samples=samples, seed=seed)
    frames, models, ces = (
        k1.frames_checked + k2.frames_checked + k3.frames_checked,
        k1.models_checked + k2.models_checked + k3.models_checked,
        k1.counterexamples + k2.counterexamples + k3.counterexamples,
    )
    items.append(
        SuiteItem("K", "valid on every frame", frames, models, ces, not ces)
    )

    t_exh = sweep_schema(
        SCHEMAS["T"], 2, logic_ids, relation_pred=lambda p: p.reflexive
    )
    t_s = sample_schema(
        SCHEMAS["T"], 3, logic_ids, samples=samples, seed=seed,
        relation_transform=reflexive_closure,
    )
    frames, models, ces = outcome_pair(t_exh, t_s)
    items.append(
        SuiteItem("T", "valid on reflexive frames", frames, models, ces, not ces)
    )

    f_exh = sweep_schema(
        SCHEMAS["4"], 2, logic_ids, relation_pred=lambda p: p.transitive
    )
    f_s = sample_schema(
        SCHEMAS["4"], 3, logic_ids, samples=samples, seed=seed,
        relation_transform=transitive_closure,
    )
    frames, models, ces = outcome_pair(f_exh, f_s)
    items.append(
        SuiteItem(
            "4", "valid on transitive frames", frames, models, ces, not ces,
            note="fails when an intermediate world's lattice forgets a designated value",
        )
    )

    fc = five_c_characterization(five_c_logic_ids)
    items.append(
        SuiteItem(
            "5c-euclidean",
            f"5c valid iff frame euclidean over {','.join(five_c_logic_ids)}",
            fc.frames_checked,
            fc.models_checked,
            fc.euclidean_failures + tuple(fc.non_euclidean_valid),
            fc.characterization_holds,
        )
    )

    du = duality_check(logic_ids)
    items.append(
        SuiteItem(
            "duality", "diamond = !box! under the up variant", 0, du.models_checked,
            du.mismatches, du.holds,
        )
    )

    for sid in ("B", "D"):
        out = sweep_schema(SCHEMAS[sid], 2, logic_ids, max_counterexamples=1)
        items.append(
            SuiteItem(
                sid,
                "observation only",
                out.frames_checked,
                out.models_checked,
                out.counterexamples,
                True,
                note=f"{len(out.counterexamples)} counterexample(s) observed; no theorem asserted",
            )
        )

    return SuiteReport(tuple(items), seed)
