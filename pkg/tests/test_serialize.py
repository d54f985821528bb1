import json

from waning import (
    CONST_OMEGA,
    OMEGA,
    Dual,
    DomMiss,
    FixBelow,
    GenFn,
    ImMiss,
    Intersection,
    PBij,
    PointHit,
    PolishTopology,
    UBasic,
    Wany,
    WaningFn,
    WNbhd,
)
from waning.serialize import (
    descriptor_from_obj,
    descriptor_to_obj,
    dumps,
    fn_from_obj,
    genfn_from_obj,
    genfn_to_obj,
    pb_from_obj,
    pb_to_obj,
    poset_from_obj,
    topology_from_obj,
    topology_to_obj,
    value_from_obj,
    value_to_obj,
    waning_from_obj,
    waning_to_obj,
)


def test_value_round_trip():
    assert value_from_obj(value_to_obj(OMEGA)) == OMEGA
    assert value_from_obj(value_to_obj(7)) == 7
    assert value_to_obj(OMEGA) == "omega"


def test_pb_round_trip():
    p = PBij([(3, 1), (0, 5)])
    assert pb_to_obj(p) == [[0, 5], [3, 1]]
    assert pb_from_obj(pb_to_obj(p)) == p


def test_waning_round_trip():
    for w in (CONST_OMEGA, WaningFn(omega_prefix=2, drops=(4, 1)), WaningFn()):
        assert waning_from_obj(waning_to_obj(w)) == w
    assert waning_to_obj(CONST_OMEGA) == {"const": "omega"}


def test_genfn_round_trip():
    f = GenFn(prefix=(OMEGA, 3), tail=0, omega=0)
    assert genfn_from_obj(genfn_to_obj(f)) == f
    assert genfn_to_obj(f)["prefix"] == ["omega", 3]


def test_fn_from_obj_discriminates():
    assert isinstance(fn_from_obj({"prefix": [1], "tail": 0, "omega": 0}), GenFn)
    assert isinstance(fn_from_obj({"omega_prefix": 0, "drops": [2]}), WaningFn)
    assert isinstance(fn_from_obj({"const": "omega"}), WaningFn)


def test_descriptor_round_trip_all_tags():
    g = PBij([(0, 0)])
    descriptors = [
        PointHit(1, 2),
        DomMiss(0),
        ImMiss(3),
        UBasic(WaningFn(drops=(2,)), 1, {0, 4}),
        UBasic(GenFn(prefix=(3, 3)), 0, set()),
        WNbhd(WaningFn(), g, 1),
        Wany(2, [frozenset({0}), frozenset({1, 3})]),
        Dual(DomMiss(1)),
        Intersection((DomMiss(0), ImMiss(1))),
        FixBelow(g, 2),
    ]
    for d in descriptors:
        obj = descriptor_to_obj(d)
        assert descriptor_from_obj(json.loads(dumps(obj))) == d


def test_topology_round_trip():
    for t in (
        PolishTopology(CONST_OMEGA),
        PolishTopology(WaningFn(drops=(3,)), dual=True),
    ):
        assert topology_from_obj(topology_to_obj(t)) == t
    # canonicalisation survives the wire
    assert topology_from_obj({"dual": {"omega_prefix": 0, "drops": []}}) == (
        PolishTopology(WaningFn())
    )


def test_poset_from_obj():
    p = poset_from_obj(
        {"elements": ["a", "b"], "leq": [["a", "a"], ["b", "b"], ["a", "b"]]}
    )
    assert p.le("a", "b") and not p.le("b", "a")
