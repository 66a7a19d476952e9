"""Diagrams on one oriented interval in degree <= 2, modulo AS and STU.

A strand diagram is stored as a :class:`Character` whose legs carry their
position along the interval (1, 2, ... from the start), so canonical forms
and AS signs come for free.  The quotient by STU is computed once by
enumerating every diagram with at most four dashed vertices, writing down
every STU instance among them, and row reducing over the rationals.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .diagrams import EMPTY, INTERNAL, Character, CharCombo, canonicalize, disjoint_union
from .pairing import perfect_matchings

__all__ = ["MAX_DEGREE", "StrandSpace", "strand_space", "chi", "juxtapose",
           "stu_relation", "StrandError"]

MAX_DEGREE = 2


class StrandError(ValueError):
    pass


def _touches_strand(d: Character) -> bool:
    return all(any(d.kinds[v] != INTERNAL for v in comp) for comp in d.components())


def _raw_diagrams(n_legs: int, n_internal: int):
    kinds = tuple(range(1, n_legs + 1)) + (INTERNAL,) * n_internal
    ends = [(v, 0) for v in range(n_legs)]
    ends += [(n_legs + t, s) for t in range(n_internal) for s in range(3)]
    for matching in perfect_matchings(ends):
        adj = [[None] * (1 if k else 3) for k in kinds]
        for (u, su), (v, sv) in matching:
            adj[u][su] = (v, sv)
            adj[v][sv] = (u, su)
        yield Character(kinds, tuple(tuple(r) for r in adj))


def stu_relation(d: Character, leg: int) -> CharCombo | None:
    """``S - T + U`` for the STU instance at the leg in vertex slot ``leg``.

    ``None`` when that leg is not attached to a trivalent vertex.  For the
    trivalent vertex ``t`` read as ``(leg, a, b)``, ``T`` puts the ends
    ``a`` then ``b`` on the strand where the leg was, ``U`` the reverse.
    """
    (t, s), = d.adj[leg]
    if d.kinds[t] != INTERNAL:
        return None
    p = d.kinds[leg]
    a = d.adj[t][(s + 1) % 3]
    b = d.adj[t][(s + 2) % 3]
    if a[0] == t:  # tadpole: S vanishes by AS and so do T, U
        return CharCombo()

    def split(first, second):
        kinds = [k + 1 if k > p else k for k in d.kinds]
        kinds[leg] = p
        kinds[t] = p + 1  # reuse vertex t as the second new leg
        adj = [list(row) for row in d.adj]
        adj[leg] = [first]
        adj[t] = [second]
        adj[first[0]][first[1]] = (leg, 0)
        adj[second[0]][second[1]] = (t, 0)
        return Character(tuple(kinds), tuple(tuple(r) for r in adj))

    return CharCombo.from_pairs([(d, 1), (split(a, b), -1), (split(b, a), 1)])


def _gauss_rref(rows: list[dict[int, Fraction]], order: list[int]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form; pivots are taken in ``order`` priority."""
    rank = {c: r for r, c in enumerate(order)}
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        for c, prow in pivots.items():
            if c in row:
                f = row[c]
                for cc, vv in prow.items():
                    nv = row.get(cc, Fraction(0)) - f * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
        if not row:
            continue
        pc = min(row, key=rank.__getitem__)
        inv = 1 / row[pc]
        row = {c: v * inv for c, v in row.items()}
        for c, prow in pivots.items():
            if pc in prow:
                f = prow[pc]
                for cc, vv in row.items():
                    nv = prow.get(cc, Fraction(0)) - f * vv
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        pivots[pc] = row
    return pivots


class StrandSpace:
    """Degree <= 2 diagrams on one strand modulo AS and STU."""

    def __init__(self):
        basis: set[Character] = {EMPTY}
        # diagrams killed by AS still give STU instances between survivors
        shapes: set[Character] = set()
        for deg in range(MAX_DEGREE + 1):
            for n_int in range(0, 2 * deg):
                n_legs = 2 * deg - n_int
                for raw in _raw_diagrams(n_legs, n_int):
                    if not _touches_strand(raw):
                        continue
                    canon, s = canonicalize(raw)
                    shapes.add(canon)
                    if s:
                        basis.add(canon)
        # more trivalent vertices first: those become pivots and get eliminated
        self.basis = sorted(basis, key=lambda d: (d.degree, -d.n_internal, d.kinds, d.adj))
        self.index = {d: i for i, d in enumerate(self.basis)}
        self.relations = []
        for d in sorted(shapes, key=lambda d: (d.kinds, d.adj)):
            for v, k in enumerate(d.kinds):
                if k == INTERNAL:
                    continue
                rel = stu_relation(d, v)
                if rel:
                    self.relations.append(rel)
        rows = [{self.index[e]: c for e, c in rel.items()} for rel in self.relations]
        self._pivots = _gauss_rref(rows, list(range(len(self.basis))))

    def dimension(self, degree: int) -> int:
        return sum(1 for i, d in enumerate(self.basis)
                   if d.degree == degree and i not in self._pivots)

    def reduce(self, x: CharCombo) -> CharCombo:
        """Normal form of ``x`` in the quotient."""
        vec: dict[int, Fraction] = {}
        for d, c in x.items():
            if d.degree > MAX_DEGREE:
                raise StrandError(f"degree {d.degree} exceeds {MAX_DEGREE}")
            vec[self.index[d]] = vec.get(self.index[d], Fraction(0)) + c
        for pc, prow in self._pivots.items():
            f = vec.get(pc)
            if f:
                for cc, vv in prow.items():
                    nv = vec.get(cc, Fraction(0)) - f * vv
                    if nv:
                        vec[cc] = nv
                    else:
                        vec.pop(cc, None)
        return CharCombo({self.basis[i]: c for i, c in vec.items()})

    def is_zero(self, x: CharCombo) -> bool:
        return not self.reduce(x)


@lru_cache(maxsize=1)
def strand_space() -> StrandSpace:
    return StrandSpace()


def chi(x: CharCombo) -> CharCombo:
    """Average over all orders of attaching the legs to the strand."""
    pairs = []
    for d, c in x.items():
        legs = [v for v, k in enumerate(d.kinds) if k != INTERNAL]
        if len(set(d.kinds[v] for v in legs)) > 1:
            raise StrandError("chi is implemented for characters with a single label")
        if d.degree > MAX_DEGREE:
            raise StrandError(f"degree {d.degree} exceeds {MAX_DEGREE}")
        weight = c / factorial(len(legs))
        for order in permutations(range(1, len(legs) + 1)):
            kinds = list(d.kinds)
            for v, pos in zip(legs, order):
                kinds[v] = pos
            pairs.append((Character(tuple(kinds), d.adj, d.circles), weight))
    return CharCombo.from_pairs(pairs)


def juxtapose(a: CharCombo, b: CharCombo) -> CharCombo:
    """Stack ``b`` after ``a`` and reduce modulo STU."""
    pairs = []
    for da, ca in a.items():
        shift = da.n_legs
        for db, cb in b.items():
            if da.degree + db.degree > MAX_DEGREE:
                raise StrandError(f"degree {da.degree + db.degree} exceeds {MAX_DEGREE}")
            moved = db.relabel({k: k + shift for k in set(db.kinds) if k})
            pairs.append((disjoint_union(da, moved), ca * cb))
    return strand_space().reduce(CharCombo.from_pairs(pairs))
