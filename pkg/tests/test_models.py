import json
from itertools import product

import pytest

from manylogic.lattices import L6
from manylogic.logics import LOGIC_IDS, LOGICS
from manylogic.models import (
    Model,
    ModelFormatError,
    eval_formula,
    holds,
    load_model,
    model_from_dict,
    model_to_dict,
    validate,
)
from manylogic.syntax import parse
from manylogic.values import Value as V


def mk(worlds, logics, relation, valuation, diamond="up"):
    return Model(
        tuple(worlds),
        frozenset(tuple(p) for p in relation),
        dict(logics),
        {w: {a: v for a, v in row.items()} for w, row in valuation.items()},
        diamond,
    )


def test_fixture_values(fixtures):
    expected = {
        ("ex1.json", "w1", "[]p"): V.b,
        ("ex2.json", "w1", "[]p"): V.F0,
        ("ex3.json", "w2", "[]p"): V.F0,
        ("ex3.json", "w3", "[]p"): V.F,
        ("ex3.json", "w2", "[]q"): V.F0,
        ("ex3.json", "w3", "[]q"): V.n,
        ("ex4.json", "w1", "[]p"): V.F0,
        ("ex4.json", "w4", "[]p"): V.F0,
        ("ex4.json", "w7", "[]p"): V.T0,
        ("sec2.json", "w1", "[]p"): V.b,
        ("sec2.json", "w2", "[]p"): V.b,
        ("sec2.json", "w3", "[]p"): V.F0,
    }
    for (name, world, text), want in expected.items():
        model = load_model(fixtures / name)
        assert validate(model).ok
        assert eval_formula(model, world, parse(text)) == want, (name, world, text)


def test_fixture_designation(fixtures):
    m1 = load_model(fixtures / "ex1.json")
    assert holds(m1, "w1", parse("[]p"))
    nec = load_model(fixtures / "nec-fail.json")
    f = parse("[](p -> (p | q))")
    assert not holds(nec, "w1", f)
    assert eval_formula(nec, "w1", f) == V.F0
    # the unmodalised formula holds at every world of the fixture
    for w in nec.worlds:
        assert holds(nec, w, parse("p -> (p | q)"))


def test_every_world_designates_identity_implication(fixtures):
    for name in ("ex1.json", "ex2.json", "ex3.json", "ex4.json", "sec2.json"):
        model = load_model(fixtures / name)
        for w in model.worlds:
            assert holds(model, w, parse("p -> p"))


def test_reflexive_singleton_box_is_identity():
    for lid in LOGIC_IDS:
        for x in LOGICS[lid].lattice.elements:
            model = mk(["w"], {"w": lid}, [("w", "w")], {"w": {"p": x}})
            assert eval_formula(model, "w", parse("[]p")) == x


def test_dead_end_conventions():
    model = mk(["w"], {"w": "LJ4"}, [], {"w": {"p": V.b}})
    assert eval_formula(model, "w", parse("[]p")) == LOGICS["LJ4"].lattice.top
    assert eval_formula(model, "w", parse("<>p")) == LOGICS["LJ4"].lattice.bottom
    down = mk(["w"], {"w": "LJ4"}, [], {"w": {"p": V.b}}, diamond="down")
    assert eval_formula(down, "w", parse("<>p")) == LOGICS["LJ4"].lattice.bottom


def test_missing_atom_defaults_to_bottom_with_warning():
    model = mk(["w1", "w2"], {"w1": "LETK", "w2": "FDE"}, [("w1", "w2")], {"w1": {"p": V.T}})
    report = validate(model)
    assert report.ok
    assert any("w2" in w and "p" in w for w in report.warnings)
    assert eval_formula(model, "w2", parse("p")) == V.F0
    assert eval_formula(model, "w1", parse("[]p")) == V.F0


def test_validation_errors():
    bad_value = mk(["w"], {"w": "J3"}, [], {"w": {"p": V.n}})
    report = validate(bad_value)
    assert not report.ok and any("n" in e and "B3s" in e for e in report.errors)
    bad_rel = mk(["w"], {"w": "J3"}, [("w", "v")], {})
    assert any("unknown world" in e for e in validate(bad_rel).errors)
    bad_logic = mk(["w"], {"w": "XXX"}, [], {})
    assert not validate(bad_logic).ok


def test_json_strictness(fixtures):
    data = json.loads((fixtures / "ex1.json").read_text())
    data["note"] = "boom"
    with pytest.raises(ModelFormatError):
        model_from_dict(data)
    del data["note"]
    data["valuation"]["w1"]["p"] = "X"
    with pytest.raises(ModelFormatError):
        model_from_dict(data)
    del data["valuation"]
    with pytest.raises(ModelFormatError):
        model_from_dict(data)


def test_json_roundtrip(fixtures):
    model = load_model(fixtures / "ex4.json")
    again = model_from_dict(model_to_dict(model))
    assert again.worlds == model.worlds
    assert again.relation == model.relation
    assert again.valuation == model.valuation
    assert again.diamond == model.diamond


def test_strong_negation_rewrites():
    # all worlds in the strong four-valued logic, p contradictory everywhere
    worlds = ["w1", "w2"]
    rel = [(a, b) for a in worlds for b in worlds]
    model = mk(worlds, {w: "LJ4" for w in worlds}, rel, {w: {"p": V.b} for w in worlds})
    for w in worlds:
        assert eval_formula(model, w, parse("~p")) == V.F
        assert eval_formula(model, w, parse("~[]~p")) == V.T


def test_diamond_variant_comparison(fixtures):
    model = load_model(fixtures / "diamond-compare.json")
    assert model.diamond == "down"
    assert eval_formula(model, "w1", parse("<>p")) == V.F0
    assert eval_formula(model, "w1", parse("![]!p")) == V.T0
    # the mirrored setup (weak four-valued world watching a Kleene world
    # with an undetermined atom) gives the same value on both sides
    mirror = mk(["w1", "w2"], {"w1": "FDE", "w2": "K3"}, [("w1", "w2")],
                {"w1": {"p": V.F0}, "w2": {"p": V.n}}, diamond="down")
    assert eval_formula(mirror, "w1", parse("<>p")) == V.n
    assert eval_formula(mirror, "w1", parse("![]!p")) == V.n


def test_negbox_variant_matches_rewrite(fixtures):
    base = load_model(fixtures / "ex1.json")
    negbox = Model(base.worlds, base.relation, base.logics, base.valuation, "negbox")
    for w in base.worlds:
        assert eval_formula(negbox, w, parse("<>p")) == eval_formula(base, w, parse("![]!p"))
    cneg = Model(base.worlds, base.relation, base.logics, base.valuation, "cnegbox")
    for w in base.worlds:
        assert eval_formula(cneg, w, parse("<>p")) == eval_formula(base, w, parse("~[]~p"))


def test_homogeneous_down_diamond_is_dual_exhaustively():
    # two worlds sharing one logic: the sup-based diamond equals !box!
    worlds = ("w1", "w2")
    rels = [
        frozenset(r)
        for r in [
            [], [("w1", "w1")], [("w1", "w2")], [("w1", "w1"), ("w1", "w2")],
            [("w1", "w2"), ("w2", "w1")],
            [(a, b) for a in worlds for b in worlds],
        ]
    ]
    for lid in LOGIC_IDS:
        lat = LOGICS[lid].lattice
        for rel in rels:
            for x1, x2 in product(lat.elements, repeat=2):
                model = mk(worlds, {w: lid for w in worlds}, rel,
                           {"w1": {"p": x1}, "w2": {"p": x2}}, diamond="down")
                for w in worlds:
                    assert eval_formula(model, w, parse("<>p")) == eval_formula(
                        model, w, parse("![]!p")
                    )


def test_box_via_base_lattice_identity():
    # box = down-interpreted base-lattice meet of the successor values
    rng_worlds = ("w1", "w2", "w3")
    rels = [
        frozenset([("w1", "w2"), ("w2", "w3")]),
        frozenset([("w1", "w1"), ("w1", "w2"), ("w1", "w3")]),
        frozenset(),
        frozenset((a, b) for a in rng_worlds for b in rng_worlds),
    ]
    assignments = [
        ("LETK", "K3", "LJ4"),
        ("CLW", "LETK", "FDE"),
        ("J3", "L3", "LP"),
    ]
    texts = ("p", "!p", "@p", "p & !p")
    for rel in rels:
        for logics_row in assignments:
            logic_map = dict(zip(rng_worlds, logics_row))
            values = [LOGICS[l].lattice.elements[0] for l in logics_row]
            combos = product(*[LOGICS[l].lattice.elements for l in logics_row])
            for combo in list(combos)[::3]:
                valuation = {w: {"p": v} for w, v in zip(rng_worlds, combo)}
                model = mk(rng_worlds, logic_map, rel, valuation)
                for text in texts:
                    f = parse(text)
                    for w in rng_worlds:
                        inner = [
                            eval_formula(model, u, f) for u in model.successors(w)
                        ]
                        lat = model.logic(w).lattice
                        want = lat.down(L6.meet_set(inner))
                        got = eval_formula(model, w, parse(f"[]({text})"))
                        assert got == want


def test_evaluation_is_local_to_reachable_worlds():
    worlds = ("w1", "w2", "w3")
    rel = frozenset([("w1", "w2")])  # w3 unreachable from w1
    logic_map = {"w1": "LETK", "w2": "FDE", "w3": "J3"}
    base = mk(worlds, logic_map, rel, {"w1": {"p": V.b}, "w2": {"p": V.T0}, "w3": {"p": V.b}})
    f = parse("[](p | !p) -> <>p")
    want = eval_formula(base, "w1", f)
    for other in LOGICS["J3"].lattice.elements:
        tweaked = mk(worlds, logic_map, rel,
                     {"w1": {"p": V.b}, "w2": {"p": V.T0}, "w3": {"p": other}})
        assert eval_formula(tweaked, "w1", f) == want


def test_eval_unknown_world():
    model = mk(["w"], {"w": "FDE"}, [], {"w": {"p": V.b}})
    with pytest.raises(ModelFormatError):
        eval_formula(model, "nope", parse("p"))


def test_frame_files_reject_valuations(fixtures):
    from manylogic.models import frame_from_dict, load_frame

    data = json.loads((fixtures / "ex1.json").read_text())
    with pytest.raises(ModelFormatError):
        frame_from_dict(data)
    frame = load_frame(fixtures / "euclid3.json")
    assert frame.successors("w1") == ("w1", "w2", "w3")
    assert frame.logic("w2").id == "K3"


def test_random_models_evaluate_inside_their_world_lattices():
    from random import Random

    from manylogic.models import validate as validate_model

    rng = Random(17)
    texts = ("p", "!p", "[]p", "<>p", "[](p | !p)", "<>~p -> []p", "@p & <>p")
    for _ in range(120):
        n = rng.randint(1, 4)
        worlds = tuple(f"w{i}" for i in range(1, n + 1))
        lids = {w: rng.choice(LOGIC_IDS) for w in worlds}
        rel = frozenset(
            (a, b) for a in worlds for b in worlds if rng.random() < 0.4
        )
        valuation = {
            w: {"p": rng.choice(LOGICS[lids[w]].lattice.elements)} for w in worlds
        }
        variant = rng.choice(("up", "down", "negbox", "cnegbox"))
        model = Model(worlds, rel, lids, valuation, variant)
        assert validate_model(model).ok
        for w in worlds:
            lg = model.logic(w)
            for text in texts:
                value = eval_formula(model, w, parse(text))
                assert value in lg.lattice.members
                assert holds(model, w, parse(text)) == lg.is_designated(value)
