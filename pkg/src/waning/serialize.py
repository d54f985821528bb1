"""JSON encodings for all public value types.

Extended naturals serialize as ints with the single non-numeric token
``"omega"``.  Partial bijections are sorted arrays of two-element arrays.
Waning functions are ``{"const":"omega"}`` or ``{"omega_prefix":k,"drops":[...]}``;
eventually-constant functions are ``{"prefix":[...],"tail":v,"omega":v}``.
Descriptors are tagged objects, topologies ``{"direct":...}``/``{"dual":...}``.
"""

from __future__ import annotations

import json
from typing import Any

from .descriptors import (
    Dual,
    DomMiss,
    FixBelow,
    ImMiss,
    Intersection,
    PointHit,
    SetDescriptor,
    UBasic,
    Wany,
    WNbhd,
)
from .errors import DomainError
from .extnat import OMEGA, ExtNat, is_omega
from .functions import GenFn, WaningFn
from .pbij import PBij


def value_to_obj(v: ExtNat) -> Any:
    return "omega" if is_omega(v) else int(v)


def value_from_obj(obj: Any) -> ExtNat:
    if obj == "omega":
        return OMEGA
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise DomainError(f"expected a natural or \"omega\", got {obj!r}")
    return obj


def pb_to_obj(p: PBij) -> list:
    return [[x, y] for x, y in p.pairs]


def pb_from_obj(obj: Any) -> PBij:
    if not isinstance(obj, list):
        raise DomainError(f"expected an array of pairs, got {obj!r}")
    return PBij(tuple(pair) for pair in obj)


def waning_to_obj(w: WaningFn) -> dict:
    if w.const_omega:
        return {"const": "omega"}
    return {"omega_prefix": w.omega_prefix, "drops": list(w.drops)}


def waning_from_obj(obj: Any) -> WaningFn:
    if not isinstance(obj, dict):
        raise DomainError(f"expected a waning-function object, got {obj!r}")
    if obj.get("const") == "omega":
        return WaningFn(const_omega=True)
    return WaningFn(
        omega_prefix=int(obj.get("omega_prefix", 0)),
        drops=tuple(int(d) for d in obj.get("drops", ())),
    )


def genfn_to_obj(f: GenFn) -> dict:
    return {
        "prefix": [value_to_obj(v) for v in f.prefix],
        "tail": value_to_obj(f.tail),
        "omega": value_to_obj(f.omega),
    }


def genfn_from_obj(obj: Any) -> GenFn:
    if not isinstance(obj, dict):
        raise DomainError(f"expected a function object, got {obj!r}")
    return GenFn(
        prefix=tuple(value_from_obj(v) for v in obj.get("prefix", ())),
        tail=value_from_obj(obj.get("tail", 0)),
        omega=value_from_obj(obj.get("omega", 0)),
    )


def fn_to_obj(f) -> dict:
    return waning_to_obj(f) if isinstance(f, WaningFn) else genfn_to_obj(f)


def fn_from_obj(obj: Any):
    """Accept either encoding; the key set discriminates."""
    if isinstance(obj, dict) and ("prefix" in obj or "tail" in obj):
        return genfn_from_obj(obj)
    return waning_from_obj(obj)


def descriptor_to_obj(d: SetDescriptor) -> dict:
    if isinstance(d, PointHit):
        return {"hit": [d.x, d.y]}
    if isinstance(d, DomMiss):
        return {"dommiss": d.x}
    if isinstance(d, ImMiss):
        return {"immiss": d.x}
    if isinstance(d, UBasic):
        return {"U": {"f": fn_to_obj(d.f), "n": d.n, "X": sorted(d.avoid)}}
    if isinstance(d, WNbhd):
        return {"W": {"f": waning_to_obj(d.f), "g": pb_to_obj(d.g), "r": d.r}}
    if isinstance(d, Wany):
        return {
            "wany": {"n": d.n, "Ys": sorted(sorted(ys) for ys in d.families)}
        }
    if isinstance(d, Dual):
        return {"dual": descriptor_to_obj(d.inner)}
    if isinstance(d, Intersection):
        return {"and": [descriptor_to_obj(p) for p in d.parts]}
    if isinstance(d, FixBelow):
        return {"fix": {"g": pb_to_obj(d.g), "r": d.r}}
    raise DomainError(f"not a descriptor: {d!r}")


def descriptor_from_obj(obj: Any) -> SetDescriptor:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise DomainError(f"expected a single-tag descriptor object, got {obj!r}")
    tag, body = next(iter(obj.items()))
    if tag == "hit":
        return PointHit(int(body[0]), int(body[1]))
    if tag == "dommiss":
        return DomMiss(int(body))
    if tag == "immiss":
        return ImMiss(int(body))
    if tag == "U":
        return UBasic(fn_from_obj(body["f"]), int(body["n"]), body.get("X", ()))
    if tag == "W":
        return WNbhd(
            waning_from_obj(body["f"]), pb_from_obj(body["g"]), int(body["r"])
        )
    if tag == "wany":
        return Wany(int(body["n"]), body["Ys"])
    if tag == "dual":
        return Dual(descriptor_from_obj(body))
    if tag == "and":
        return Intersection(descriptor_from_obj(p) for p in body)
    if tag == "fix":
        return FixBelow(pb_from_obj(body["g"]), int(body["r"]))
    raise DomainError(f"unknown descriptor tag {tag!r}")


def topology_to_obj(t) -> dict:
    key = "dual" if t.dual else "direct"
    return {key: waning_to_obj(t.f)}


def topology_from_obj(obj: Any):
    # local import: the topology module depends on this one
    from .topology import PolishTopology

    if not isinstance(obj, dict) or len(obj) != 1:
        raise DomainError(f"expected a topology object, got {obj!r}")
    tag, body = next(iter(obj.items()))
    if tag == "direct":
        return PolishTopology(waning_from_obj(body))
    if tag == "dual":
        return PolishTopology(waning_from_obj(body), dual=True)
    raise DomainError(f"unknown topology tag {tag!r}")


def poset_from_obj(obj: Any):
    from .topology import FinitePoset

    if not isinstance(obj, dict):
        raise DomainError(f"expected a poset object, got {obj!r}")
    return FinitePoset(obj.get("elements", ()), obj.get("leq", ()))


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)
