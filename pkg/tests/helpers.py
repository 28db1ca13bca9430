"""Shared corings and the acceptance-line recorder used across test files."""

from __future__ import annotations

import functools

from coring_lab import algebra as alg
from coring_lab import constructions as cons


@functools.lru_cache(maxsize=None)
def named_coring(name: str):
    """Shared corings for property tests, built once per session."""
    if name == "KC2":
        return cons.comodule_algebra_coring(cons.regular_comodule_algebra(cons.hopf_group_algebra(3, alg.cyclic_group(2))))
    if name == "h90":
        return cons.dual_coring(alg.frobenius_action(alg.finite_field(2, 2), alg.cyclic_group(2)))
    if name == "M2diag":
        A = alg.matrix_algebra(2, 2)
        return cons.sweedler(A, alg.subring_closure(A, [[1, 0, 0, 0]]))
    if name == "sum":
        return cons.direct_sum_coring(alg.prime_field(2))
    A = {"F4": alg.finite_field(2, 2), "F9": alg.finite_field(3, 2), "M2": alg.matrix_algebra(2, 2), "T2": alg.upper_triangular(2, 2)}[name]
    return cons.sweedler(A, alg.prime_subring(A))


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(n: int, title: str, ok: bool) -> None:
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {title}"
    ACCEPTANCE[n] = ("PASS" if ok else "FAIL", line)
    print(line)
