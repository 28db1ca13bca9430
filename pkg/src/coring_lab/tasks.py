"""Named computations on an instance, each producing a :class:`Report`."""

from __future__ import annotations

import time

from . import constructions as cons
from .checks import ORACLE_LIMIT, property_suite
from .coring import (
    coinvariants,
    coring_automorphisms,
    galois_grouplikes,
    grouplikes,
    grouplikes_brute_force,
    is_galois,
)
from .descent import (
    EmptyGrouplikeSet,
    aut_orbits,
    aut_table,
    clasico_check,
    d0,
    d1,
    exact_sequence_report,
    mejor_check,
    n1,
    theta_check,
)
from .errors import CoringLabError, UnknownTask
from .instances import Construction, Instance
from .reports import FAIL, Clause, Report

EXPLAIN = {
    "validate": (
        "Coring axioms. Checks that the comultiplication C -> C (x)_A C is coassociative, "
        "that the counit C -> A satisfies both counit laws, and that both maps are A-bimodule maps. "
        "With \"properties\": true it also runs the exhaustive identity suite."
    ),
    "grouplikes": (
        "Grouplike elements: g in C with Delta(g) = g (x)_A g and eps(g) = 1. "
        "Found by solving eps(g) = 1 and filtering the quadratic condition."
    ),
    "coinvariants": "The coinvariant subring A^g = {a in A : a g = g a} of a grouplike g.",
    "galois": (
        "A grouplike g is Galois when the canonical map A (x)_{A^g} A -> C, "
        "a (x) a' -> a g a', is bijective. Gal(C) is the set of Galois grouplikes."
    ),
    "d0": "Zeroth descent cohomology D0(C, g) = U(A^g), the units of the coinvariant subring.",
    "d1": (
        "First descent cohomology D1(C, g): the set of U(A)-orbits of Gl(C) under "
        "alpha . h = alpha h alpha^-1, pointed at the orbit of g."
    ),
    "n1": (
        "Noncommutative first descent cohomology N1(C, g): orbits of Gl(C) under conjugation by "
        "U(A)_g = {alpha in U(A) : alpha A^g = A^g alpha}, with the canonical surjection onto D1."
    ),
    "aut": (
        "Aut(C): invertible A-bimodule maps phi: C -> C with Delta phi = (phi (x) phi) Delta "
        "and eps phi = eps, acting on Gl(C) by (phi, g) -> phi(g)."
    ),
    "exactseq": (
        "For Galois g: 1 -> U(A^g) -> U(A)_g -> Aut(C) is exact, where alpha maps to "
        "can_g psi_{alpha^-1} can_g^-1 and psi_beta(a (x) a') = a beta (x) beta^-1 a'. "
        "If U(A) is transitive on Gal(C) the last map is onto, so Aut(C) = U(A)_g / U(A^g)."
    ),
    "mejor": (
        "When g is Galois and U(A) is transitive on Gal(C), the following are equivalent: "
        "(i) U(A)_g = U(A); (ii) U(A)_h = U(A) for every Galois h; (iii) Aut(C) is transitive on Gal(C). "
        "If they hold, phi -> phi(g) is a bijection Aut(C) -> Gal(C) and 1 -> U(A^g) -> U(A) -> Gal(C) -> 1 is exact."
    ),
    "z1": (
        "Nonabelian 1-cocycles of a right action of G on U(A): maps f: G -> U(A) with "
        "f(xy) = f(y) f(x)^y."
    ),
    "h1": (
        "First cohomology H1: cocycles modulo f ~ (x -> alpha^-1 f(x) alpha^x), pointed at the trivial class; "
        "H0 is the group of invariant units."
    ),
    "theta": (
        "For R = G * A and its right dual R* = Hom_A(R, A): the map h -> (x -> h(x)) is a bijection from "
        "Gl(R*) onto the 1-cocycles, the trace grouplike goes to the trivial cocycle, and two cocycles "
        "are cohomologous exactly when their grouplikes are conjugate."
    ),
    "clasico": (
        "For the trace grouplike t of R*: D0(R*, t) equals the invariant units H0, "
        "and D1(R*, t) corresponds to H1 as pointed sets."
    ),
    "gl-embedding": (
        "For a finite Hopf algebra H coacting on itself: x -> 1 (x) x sends Gl(H) injectively into "
        "Gl(H (x) H) and is multiplicative for the group law transported from U(H)."
    ),
}

TASKS = tuple(EXPLAIN)


def explain(task: str) -> str:
    if task not in EXPLAIN:
        raise UnknownTask(f"unknown task {task!r}; known: {', '.join(TASKS)}")
    return EXPLAIN[task]


def _coords(g) -> list[int]:
    return list(g.coords)


def _orbits_dict(O) -> dict:
    if isinstance(O, EmptyGrouplikeSet):
        return {"empty": True}
    return {
        "orbits": [[list(x) for x in o] for o in O.orbits],
        "sizes": O.sizes(),
        "distinguished": O.distinguished,
        "trivial": O.is_trivial(),
    }


def _validate(inst, con, rep, entry):
    C = con.coring
    rep.data.update({"p": C.p, "algebra_dim": C.algebra.dim, "dim": C.dim, "name": C.name})
    rep.check("coring axioms", True)
    if entry.get("properties"):
        suite = property_suite(C, inst.budget)
        rep.clauses.extend(suite.clauses)


def _grouplikes(inst, con, rep, entry):
    C = con.coring
    gl = grouplikes(C, inst.budget)
    rep.data.update({"count": len(gl), "grouplikes": [_coords(g) for g in gl]})
    if C.p**C.dim <= ORACLE_LIMIT:
        brute = grouplikes_brute_force(C, inst.budget)
        rep.check("matches brute force", [g.coords for g in brute] == [g.coords for g in gl])
    else:
        rep.skip("matches brute force", reason="carrier too large for the oracle")


def _grouplike_or_skip(inst, con, rep, entry):
    g = inst.grouplike(con, entry.get("grouplike"))
    if g is None:
        rep.skip("grouplike", reason="Gl(C) is empty")
    else:
        rep.data["grouplike"] = _coords(g)
    return g


def _coinvariants(inst, con, rep, entry):
    g = _grouplike_or_skip(inst, con, rep, entry)
    if g is None:
        return
    B = coinvariants(con.coring, g)
    rep.data.update({"basis": B.basis.tolist(), "dim": B.dim, "division_ring": B.is_division_ring(inst.budget)})
    rep.check("subring", True)


def _galois(inst, con, rep, entry):
    C = con.coring
    gl = grouplikes(C, inst.budget)
    gal = galois_grouplikes(C, inst.budget)
    rep.data.update(
        {
            "count": len(gal),
            "galois": [_coords(g) for g in gal],
            "non_galois": [_coords(g) for g in gl if not is_galois(C, g)],
        }
    )
    rep.check("computed", True)


def _d0(inst, con, rep, entry):
    g = _grouplike_or_skip(inst, con, rep, entry)
    if g is None:
        return
    H = d0(con.coring, g, inst.budget)
    rep.data.update({"order": len(H), "units": [list(k) for k in H.keys()]})
    rep.check("subgroup", H.is_subgroup())


def _d1(inst, con, rep, entry):
    g = _grouplike_or_skip(inst, con, rep, entry)
    O = d1(con.coring, g, inst.budget)
    rep.data.update(_orbits_dict(O))
    if not isinstance(O, EmptyGrouplikeSet):
        rep.check("matches full orbit computation", O == d1(con.coring, g, inst.budget, full=True))


def _n1(inst, con, rep, entry):
    g = _grouplike_or_skip(inst, con, rep, entry)
    O, surj = n1(con.coring, g, inst.budget)
    rep.data.update(_orbits_dict(O))
    if isinstance(O, EmptyGrouplikeSet):
        return
    rep.data["surjection"] = surj
    coarse = d1(con.coring, g, inst.budget)
    rep.check("refines D1", surj is not None)
    rep.check("surjects onto D1", surj is not None and set(surj) == set(range(len(coarse))))


def _aut(inst, con, rep, entry):
    C = con.coring
    auts = coring_automorphisms(C, inst.budget)
    rep.data["order"] = len(auts)
    O = aut_orbits(C, con.grouplike, inst.budget)
    rep.data["orbits"] = _orbits_dict(O)
    table = aut_table(C, inst.budget)
    rep.check("automorphisms permute Gl(C)", all(sorted(row) == list(range(len(row))) for row in table.tolist()))


def _merge(rep, sub):
    rep.clauses.extend(sub.clauses)
    rep.data.update(sub.data)


def _exactseq(inst, con, rep, entry):
    g = _grouplike_or_skip(inst, con, rep, entry)
    if g is not None:
        _merge(rep, exact_sequence_report(con.coring, g, inst.budget))


def _mejor(inst, con, rep, entry):
    g = _grouplike_or_skip(inst, con, rep, entry)
    if g is not None:
        _merge(rep, mejor_check(con.coring, g, inst.budget))


def _need_action(con, rep):
    if con.action is None:
        rep.skip("action", reason="construction is not the dual of a crossed product")
        return False
    return True


def _z1(inst, con, rep, entry):
    if not _need_action(con, rep):
        return
    cocycles = cons.z1(con.action, inst.budget)
    rep.data.update({"count": len(cocycles), "cocycles": [[list(v) for v in c.values] for c in cocycles]})
    U = con.action.algebra.units(inst.budget)
    if len(U) ** con.action.group.order <= ORACLE_LIMIT:
        brute = cons.z1_brute_force(con.action, inst.budget)
        rep.check("matches brute force", [c.values for c in brute] == [c.values for c in cocycles])
    else:
        rep.skip("matches brute force", reason="too many functions for the oracle")


def _h1(inst, con, rep, entry):
    if not _need_action(con, rep):
        return
    H = cons.h1(con.action, inst.budget)
    rep.data.update(
        {
            "classes": [[[list(v) for v in c] for c in o] for o in H.orbits],
            "sizes": H.sizes(),
            "distinguished": H.distinguished,
            "trivial": H.is_trivial(),
        }
    )
    inv = cons.h0(con.action, inst.budget)
    rep.data["h0"] = [list(k) for k in inv.keys()]
    rep.check("H0 is a subgroup", inv.is_subgroup())


def _theta(inst, con, rep, entry):
    if _need_action(con, rep):
        _merge(rep, theta_check(con.coring, inst.budget))


def _clasico(inst, con, rep, entry):
    if _need_action(con, rep):
        _merge(rep, clasico_check(con.coring, inst.budget))


def _gl_embedding(inst, con, rep, entry):
    if con.hopf is None:
        rep.skip("hopf", reason="construction has no Hopf algebra")
        return
    _merge(rep, cons.gl_embedding_check(con.hopf, inst.budget))


RUNNERS = {
    "validate": _validate,
    "grouplikes": _grouplikes,
    "coinvariants": _coinvariants,
    "galois": _galois,
    "d0": _d0,
    "d1": _d1,
    "n1": _n1,
    "aut": _aut,
    "exactseq": _exactseq,
    "mejor": _mejor,
    "z1": _z1,
    "h1": _h1,
    "theta": _theta,
    "clasico": _clasico,
    "gl-embedding": _gl_embedding,
}


def _check_expectations(rep: Report, expect: dict) -> None:
    for k in sorted(expect):
        if k == "verdict":
            continue
        got = rep.data.get(k)
        rep.check(f"expect {k}", got == expect[k], expected=expect[k], got=got)
    if "verdict" in expect:
        got = rep.verdict
        rep.check("expect verdict", got == expect["verdict"], expected=expect["verdict"], got=got)


def run_task(inst: Instance, entry: dict, index: int = 0) -> tuple[Report, float]:
    """Run one task entry; returns the report and the elapsed seconds."""
    name = entry["task"]
    rep = Report(name)
    start = time.perf_counter()
    if name not in RUNNERS:
        raise UnknownTask(f"/tasks/{index}: unknown task {name!r}")
    cname = entry.get("construction")
    rep.data["construction"] = cname
    try:
        con: Construction = inst.construction(cname)
        RUNNERS[name](inst, con, rep, entry)
    except CoringLabError as e:
        rep.clauses.append(_error_clause(e))
    if "expect" in entry:
        _check_expectations(rep, entry["expect"])
    return rep, time.perf_counter() - start


def _error_clause(e: CoringLabError) -> Clause:
    return Clause("completed", FAIL, {"error": type(e).__name__, "message": str(e)})


def run(inst: Instance, only: list[str] | None = None) -> tuple[list[Report], list[float]]:
    reports, times = [], []
    for i, entry in enumerate(inst.tasks):
        if only and entry["task"] not in only:
            continue
        rep, dt = run_task(inst, entry, i)
        reports.append(rep)
        times.append(dt)
    return reports, times
