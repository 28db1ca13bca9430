from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence


@dataclass(frozen=True)
class PointedOrbitSet:
    """Orbits of a group action with a distinguished orbit.

    Each orbit is sorted and orbits are ordered by their least element, which
    is also the orbit's representative.
    """

    orbits: tuple[tuple, ...]
    distinguished: int

    def __len__(self):
        return len(self.orbits)

    @property
    def representatives(self) -> tuple:
        return tuple(o[0] for o in self.orbits)

    @property
    def base_orbit(self) -> tuple:
        return self.orbits[self.distinguished]

    def is_trivial(self) -> bool:
        return len(self.orbits) == 1

    def orbit_of(self, point) -> int:
        for i, o in enumerate(self.orbits):
            if point in o:
                return i
        raise KeyError(point)

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]

    def as_dict(self) -> dict:
        return {
            "orbits": [[list(x) if isinstance(x, tuple) else x for x in o] for o in self.orbits],
            "distinguished": self.distinguished,
        }


def _pointed(blocks: Iterable[Iterable[Hashable]], base) -> PointedOrbitSet:
    orbits = sorted(tuple(sorted(b)) for b in blocks)
    dist = next(i for i, o in enumerate(orbits) if base in o)
    return PointedOrbitSet(tuple(orbits), dist)


def orbits_bfs(points: Sequence, generators: Sequence, act: Callable, base) -> PointedOrbitSet:
    """Orbits as connected components under the generators (breadth first)."""
    remaining = set(points)
    blocks = []
    for start in sorted(points):
        if start not in remaining:
            continue
        remaining.discard(start)
        block, frontier = [start], [start]
        while frontier:
            nxt = []
            for x in frontier:
                for s in generators:
                    y = act(s, x)
                    if y in remaining:
                        remaining.discard(y)
                        block.append(y)
                        nxt.append(y)
            frontier = nxt
        blocks.append(block)
    return _pointed(blocks, base)


def orbits_full(points: Sequence, group: Sequence, act: Callable, base) -> PointedOrbitSet:
    """Reference computation: the orbit of every point under every element."""
    seen = set()
    blocks = []
    for x in sorted(points):
        if x in seen:
            continue
        orbit = {act(s, x) for s in group}
        seen |= orbit
        blocks.append(orbit)
    return _pointed(blocks, base)


def refines(fine: PointedOrbitSet, coarse: PointedOrbitSet) -> list[int] | None:
    """Map fine orbit -> containing coarse orbit, or None if not a refinement."""
    out = []
    for o in fine.orbits:
        targets = {coarse.orbit_of(x) for x in o}
        if len(targets) != 1:
            return None
        out.append(targets.pop())
    return out


@dataclass(frozen=True, eq=False)
class UnitSubgroup:
    """A subgroup of U(A), as sorted indices into the enumerated unit group."""

    units: object  # algebra.UnitGroup
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i) -> bool:
        return i in self._set

    def __eq__(self, other):
        if not isinstance(other, UnitSubgroup):
            return NotImplemented
        return self.units is other.units and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_members_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_members_set", s)
        return s

    @property
    def elements(self):
        return self.units.elements[list(self.members)]

    def keys(self) -> list[tuple[int, ...]]:
        return [tuple(int(c) for c in self.units.elements[i]) for i in self.members]

    def is_subgroup(self) -> bool:
        return self.units.is_subgroup(self.members)

    def normality_witness(self, ambient: UnitSubgroup):
        """First ``(x, n)`` with ``x n x^-1`` outside self, or None if normal in ``ambient``."""
        U = self.units
        for x in ambient.members:
            for n in self.members:
                c = U.mul(U.mul(x, n), U.inv[x])
                if c not in self:
                    return (x, n)
        return None

    def left_cosets(self, ambient: UnitSubgroup) -> list[tuple[int, ...]]:
        """Cosets ``x H`` inside ``ambient``, each sorted, ordered by least member."""
        U = self.units
        seen: set[int] = set()
        out = []
        for x in ambient.members:
            if x in seen:
                continue
            coset = tuple(sorted(U.mul(x, h) for h in self.members))
            seen.update(coset)
            out.append(coset)
        return out


def unit_subgroup(units, members) -> UnitSubgroup:
    return UnitSubgroup(units, tuple(sorted(set(int(m) for m in members))))
