"""Instance files: JSON documents naming algebras, groups, actions, subrings
and corings by string id, plus a list of tasks to run on them.

Objects are built lazily and memoised, so a task only pays for what it uses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import algebra as alg
from . import constructions as cons
from .coring import Coring, Grouplike, as_grouplike, grouplikes, trivial_coring
from .errors import CoringLabError, ParseError, ValidationError

SECTIONS = ("algebras", "groups", "actions", "subrings", "hopf", "constructions")


@dataclass
class Construction:
    """A coring with its distinguished grouplike and the data it came from."""

    coring: Coring
    grouplike: Grouplike | None
    kind: str
    action: alg.GroupAction | None = None
    hopf: cons.HopfData | None = None


@dataclass
class Instance:
    doc: dict
    path: str = ""
    budget: int | None = None
    _built: dict = field(default_factory=dict)

    @property
    def tasks(self) -> list[dict]:
        return self.doc.get("tasks", [])

    def get(self, section: str, name: str):
        if (section, name) in self._built:
            return self._built[(section, name)]
        entries = self.doc.get(section, {})
        pointer = f"/{section}/{name}"
        if name not in entries:
            raise ValidationError(f"unknown {section[:-1]} {name!r}", pointer)
        entry = entries[name]
        if not isinstance(entry, dict):
            raise ValidationError("entry must be an object", pointer)
        try:
            obj = BUILDERS[section](self, entry, pointer)
        except ValidationError:
            raise
        except CoringLabError as e:
            raise ValidationError(f"{type(e).__name__}: {e}", pointer, e.witness) from e
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"bad entry ({type(e).__name__}: {e})", pointer) from e
        self._built[(section, name)] = obj
        return obj

    def construction(self, name: str) -> Construction:
        return self.get("constructions", name)

    def grouplike(self, con: Construction, coords=None) -> Grouplike | None:
        if coords is not None:
            return as_grouplike(con.coring, coords)
        if con.grouplike is not None:
            return con.grouplike
        gl = grouplikes(con.coring, self.budget)
        return gl[0] if gl else None


def _need(entry: dict, k: str, pointer: str):
    if k not in entry:
        raise ValidationError(f"missing field {k!r}", pointer)
    return entry[k]


def _algebra(inst: Instance, entry: dict, ptr: str) -> alg.FiniteAlgebra:
    preset = entry.get("preset")
    if preset is None:
        return alg.build_algebra(
            _need(entry, "p", ptr), _need(entry, "dim", ptr), _need(entry, "sc", ptr), _need(entry, "unit", ptr), entry.get("name", "")
        )
    if preset == "Fq":
        return alg.finite_field(_need(entry, "p", ptr), entry.get("n", 1))
    if preset == "prime_field":
        return alg.prime_field(_need(entry, "p", ptr))
    if preset == "matrix":
        return alg.matrix_algebra(_need(entry, "p", ptr), _need(entry, "n", ptr))
    if preset == "upper_triangular":
        return alg.upper_triangular(_need(entry, "p", ptr), _need(entry, "n", ptr))
    if preset == "product":
        return alg.product_algebra(_need(entry, "p", ptr), _need(entry, "n", ptr))
    if preset == "group_algebra":
        return alg.group_algebra(_need(entry, "p", ptr), inst.get("groups", _need(entry, "group", ptr)))
    if preset == "crossed_product":
        return cons.crossed_product(inst.get("actions", _need(entry, "action", ptr)))
    if preset == "action_algebra":
        return inst.get("actions", _need(entry, "action", ptr)).algebra
    raise ValidationError(f"unknown algebra preset {preset!r}", ptr + "/preset")


def _group(inst: Instance, entry: dict, ptr: str) -> alg.FiniteGroup:
    preset = entry.get("preset")
    if preset is None:
        return alg.build_group(_need(entry, "table", ptr), entry.get("labels", ()), entry.get("name", ""))
    if preset == "cyclic":
        return alg.cyclic_group(_need(entry, "n", ptr))
    if preset == "symmetric":
        return alg.symmetric_group(_need(entry, "n", ptr))
    if preset == "trivial":
        return alg.trivial_group()
    raise ValidationError(f"unknown group preset {preset!r}", ptr + "/preset")


def _action(inst: Instance, entry: dict, ptr: str) -> alg.GroupAction:
    preset = entry.get("preset")
    G = inst.get("groups", entry["group"]) if "group" in entry else None
    if preset is None:
        if G is None:
            raise ValidationError("missing field 'group'", ptr)
        A = inst.get("algebras", _need(entry, "algebra", ptr))
        return alg.build_action(G, A, _need(entry, "maps", ptr))
    if preset == "frobenius":
        return alg.frobenius_action(inst.get("algebras", _need(entry, "algebra", ptr)), G)
    if preset == "trivial":
        return alg.trivial_action(G if G is not None else alg.trivial_group(), inst.get("algebras", _need(entry, "algebra", ptr)))
    if preset == "permutation":
        if G is None:
            raise ValidationError("missing field 'group'", ptr)
        return alg.permutation_action(G, len(G.labels[0]), _need(entry, "p", ptr))
    if preset == "pullback":
        base = inst.get("actions", _need(entry, "action", ptr))
        hom = _need(entry, "hom", ptr)
        if hom == "sign":
            hom = alg.sign_hom(G)
        return alg.pullback_action(base, G, hom)
    raise ValidationError(f"unknown action preset {preset!r}", ptr + "/preset")


def _subring(inst: Instance, entry: dict, ptr: str) -> alg.Subring:
    A = inst.get("algebras", _need(entry, "algebra", ptr))
    preset = entry.get("preset")
    if preset == "prime":
        return alg.prime_subring(A)
    if preset == "whole":
        return alg.whole_ring(A)
    if preset == "invariants":
        action = inst.get("actions", _need(entry, "action", ptr))
        if action.algebra is not A:
            raise ValidationError("action acts on a different algebra", ptr + "/action")
        return alg.fixed_subring(action)
    if preset is not None:
        raise ValidationError(f"unknown subring preset {preset!r}", ptr + "/preset")
    if "basis" in entry:
        return alg.subring_from_span(A, entry["basis"])
    return alg.subring_closure(A, entry.get("generators", []))


def _hopf(inst: Instance, entry: dict, ptr: str) -> cons.HopfData:
    preset = entry.get("preset", "group_algebra")
    if preset == "group_algebra":
        return cons.hopf_group_algebra(_need(entry, "p", ptr), inst.get("groups", _need(entry, "group", ptr)))
    if preset == "trivial":
        return cons.trivial_hopf(_need(entry, "p", ptr))
    raise ValidationError(f"unknown Hopf preset {preset!r}", ptr + "/preset")


def _construction(inst: Instance, entry: dict, ptr: str) -> Construction:
    kind = _need(entry, "construction", ptr)
    if kind == "sweedler":
        A = inst.get("algebras", _need(entry, "algebra", ptr))
        B = inst.get("subrings", _need(entry, "subring", ptr))
        if B.algebra is not A:
            raise ValidationError("subring lives in a different algebra", ptr + "/subring")
        C, g = cons.sweedler(A, B)
        return Construction(C, g, kind)
    if kind == "dual_crossed":
        action = inst.get("actions", _need(entry, "action", ptr))
        C, t = cons.dual_coring(action)
        return Construction(C, t, kind, action=action)
    if kind == "comodule_algebra":
        hopf = inst.get("hopf", _need(entry, "hopf", ptr))
        coaction = entry.get("coaction", "regular")
        if coaction == "regular":
            ca = cons.regular_comodule_algebra(hopf)
        elif coaction == "trivial":
            ca = cons.trivial_comodule_algebra(inst.get("algebras", _need(entry, "algebra", ptr)), hopf)
        else:
            A = inst.get("algebras", _need(entry, "algebra", ptr))
            ca = cons.build_comodule_algebra(A, hopf, np.asarray(coaction, dtype=np.int64))
        C, g = cons.comodule_algebra_coring(ca)
        return Construction(C, g, kind, hopf=hopf)
    if kind == "direct_sum":
        A = inst.get("algebras", _need(entry, "algebra", ptr))
        C, g = cons.direct_sum_coring(A, entry.get("copies", 2))
        return Construction(C, g, kind)
    if kind == "trivial":
        C = trivial_coring(inst.get("algebras", _need(entry, "algebra", ptr)))
        return Construction(C, as_grouplike(C, C.algebra.unit), kind)
    raise ValidationError(f"unknown construction {kind!r}", ptr + "/construction")


BUILDERS = {
    "algebras": _algebra,
    "groups": _group,
    "actions": _action,
    "subrings": _subring,
    "hopf": _hopf,
    "constructions": _construction,
}


def parse_instance(text: str, path: str = "") -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path or 'input'}: {e}") from e
    if not isinstance(doc, dict):
        raise ValidationError("top level must be an object", "")
    for section in SECTIONS:
        if not isinstance(doc.get(section, {}), dict):
            raise ValidationError("must be an object", f"/{section}")
    tasks = doc.get("tasks", [])
    if not isinstance(tasks, list):
        raise ValidationError("must be a list", "/tasks")
    from .tasks import TASKS

    constructions = doc.get("constructions", {})
    for i, t in enumerate(tasks):
        if not isinstance(t, dict) or "task" not in t:
            raise ValidationError("task entries need a 'task' field", f"/tasks/{i}")
        if t["task"] not in TASKS:
            raise ValidationError(f"unknown task {t['task']!r}", f"/tasks/{i}/task")
        if t.get("construction") not in constructions:
            raise ValidationError(f"unknown construction {t.get('construction')!r}", f"/tasks/{i}/construction")
        if not isinstance(t.get("expect", {}), dict):
            raise ValidationError("must be an object", f"/tasks/{i}/expect")
    budget = doc.get("budget")
    return Instance(doc, path, budget if isinstance(budget, int) else None)


def bundled_names() -> list[str]:
    return sorted(p.name for p in resources.files("coring_lab.data").iterdir() if p.name.endswith(".json"))


def read_instance_text(path: str) -> tuple[str, str]:
    """Contents of ``path``, falling back to a bundled instance of that name."""
    p = Path(path)
    if p.exists():
        return p.read_text(), str(p)
    name = p.name if p.name.endswith(".json") else p.name + ".json"
    if name in bundled_names():
        return resources.files("coring_lab.data").joinpath(name).read_text(), name
    raise ParseError(f"no such file or bundled instance: {path}")


def load_instance(path: str) -> Instance:
    text, where = read_instance_text(path)
    return parse_instance(text, where)
