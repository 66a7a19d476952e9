"""Uni-trivalent diagrams modulo AS, and their rational linear combinations.

A :class:`Character` is stored as a rotation system.  Every vertex has a
``kind`` (``0`` for an oriented trivalent vertex, a positive integer for a
univalent vertex carrying that label) and an ordered tuple of *ends*; an
end is a pair ``(vertex, slot)`` naming the partner half-edge.  The order
of the three slots at a trivalent vertex is its cyclic orientation, so
swapping two slots negates the diagram (AS).

Closed diagrams are characters without legs.  Free dashed circles, which
only appear while legs are being joined, are carried as an integer count.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

__all__ = [
    "StructureError",
    "Character",
    "CharCombo",
    "canonicalize",
    "disjoint_union",
    "EMPTY",
    "format_rational",
]

INTERNAL = 0


class StructureError(ValueError):
    """Raised for diagrams violating the valence rules."""


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Character:
    kinds: tuple[int, ...]
    adj: tuple[tuple[tuple[int, int], ...], ...]
    circles: int = 0

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, kinds: Iterable[int], edges: Iterable[tuple[int, int]],
              circles: int = 0) -> "Character":
        """Build a character from vertex kinds and an edge list.

        Each edge ``(u, v)`` occupies the next free slot at ``u`` and then
        at ``v``, so the order in which edges are listed fixes the
        orientation at every trivalent vertex.  ``(u, u)`` is a loop.
        """
        kinds = tuple(int(k) for k in kinds)
        slots: list[list[tuple[int, int] | None]] = [
            [None] * (3 if k == INTERNAL else 1) for k in kinds]
        fill = [0] * len(kinds)

        def take(v: int) -> int:
            if not 0 <= v < len(kinds):
                raise StructureError(f"edge endpoint {v} out of range")
            s = fill[v]
            if s >= len(slots[v]):
                raise StructureError(f"vertex {v} has too many incident edges")
            fill[v] += 1
            return s

        for u, v in edges:
            su = take(u)
            sv = take(v)
            slots[u][su] = (v, sv)
            slots[v][sv] = (u, su)
        for v, row in enumerate(slots):
            if any(e is None for e in row):
                raise StructureError(
                    f"vertex {v} has {fill[v]} incident edges, needs {len(row)}")
        return cls(kinds, tuple(tuple(row) for row in slots), circles)  # type: ignore[arg-type]

    def __post_init__(self):
        if len(self.kinds) != len(self.adj):
            raise StructureError("kinds and adjacency lengths differ")
        if self.circles < 0:
            raise StructureError("negative circle count")
        for v, (k, row) in enumerate(zip(self.kinds, self.adj)):
            if k < 0:
                raise StructureError(f"vertex {v} has negative kind")
            need = 3 if k == INTERNAL else 1
            if len(row) != need:
                raise StructureError(f"vertex {v} has valence {len(row)}, needs {need}")
            for s, (w, t) in enumerate(row):
                if not (0 <= w < len(self.kinds) and 0 <= t < len(self.adj[w])):
                    raise StructureError(f"dangling end at vertex {v}")
                if self.adj[w][t] != (v, s):
                    raise StructureError(f"ends at vertex {v} are not paired")

    # -- basic statistics ---------------------------------------------

    @property
    def n_internal(self) -> int:
        return sum(1 for k in self.kinds if k == INTERNAL)

    @property
    def n_legs(self) -> int:
        return sum(1 for k in self.kinds if k != INTERNAL)

    @property
    def degree(self) -> int:
        return len(self.kinds) // 2

    def leg_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for k in self.kinds:
            if k != INTERNAL:
                counts[k] = counts.get(k, 0) + 1
        return counts

    def legs_with_label(self, label: int) -> list[int]:
        return [v for v, k in enumerate(self.kinds) if k == label]

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.kinds)
        out = []
        for root in range(len(self.kinds)):
            if seen[root]:
                continue
            stack = [root]
            seen[root] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w, _ in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def has_tadpole(self) -> bool:
        return any(w == v for v, row in enumerate(self.adj)
                   if self.kinds[v] == INTERNAL for w, _ in row)

    # -- transformations ----------------------------------------------

    def flip(self, v: int) -> "Character":
        """Reverse the cyclic orientation at trivalent vertex ``v``."""
        if self.kinds[v] != INTERNAL:
            raise StructureError(f"vertex {v} is not trivalent")
        swap = {1: 2, 2: 1, 0: 0}
        adj = []
        for u, row in enumerate(self.adj):
            new = [(w, swap[t]) if w == v else (w, t) for w, t in row]
            if u == v:
                new = [new[0], new[2], new[1]]
            adj.append(tuple(new))
        return Character(self.kinds, tuple(adj), self.circles)

    def permute(self, perm: list[int]) -> "Character":
        """Renumber vertex ``v`` as ``perm[v]``."""
        n = len(self.kinds)
        kinds = [0] * n
        adj: list = [None] * n
        for v in range(n):
            kinds[perm[v]] = self.kinds[v]
            adj[perm[v]] = tuple((perm[w], t) for w, t in self.adj[v])
        return Character(tuple(kinds), tuple(adj), self.circles)

    def relabel(self, mapping: Mapping[int, int]) -> "Character":
        kinds = tuple(mapping.get(k, k) if k != INTERNAL else k for k in self.kinds)
        return Character(kinds, self.adj, self.circles)

    def without_circles(self) -> "Character":
        return Character(self.kinds, self.adj, 0)

    # -- text form ----------------------------------------------------

    def serialize(self) -> str:
        """Stable text form; meaningful as a key only for canonical characters."""
        inum: dict[int, int] = {}
        lnum: dict[int, int] = {}
        for v, k in enumerate(self.kinds):
            (inum if k == INTERNAL else lnum)[v] = len(inum if k == INTERNAL else lnum)

        def end(w: int, t: int) -> str:
            if w in inum:
                return f"v{inum[w]}.{t}"
            return f"l{lnum[w]}"

        lines = [f"deg={self.degree} legs={self.n_legs} circ={self.circles}"]
        for v in inum:
            lines.append(f"v{inum[v]}: ({','.join(end(w, t) for w, t in self.adj[v])})")
        for v in lnum:
            (w, t), = self.adj[v]
            lines.append(f"l{lnum[v]}: label={self.kinds[v]} -> {end(w, t)}")
        return "\n".join(lines)


EMPTY = Character((), ())


def disjoint_union(a: Character, b: Character) -> Character:
    """Disjoint union, keeping the stored orientations of both factors."""
    off = len(a.kinds)
    adj = a.adj + tuple(tuple((w + off, t) for w, t in row) for row in b.adj)
    return Character(a.kinds + b.kinds, adj, a.circles + b.circles)


# -- canonical form ---------------------------------------------------

_LEG_LIMIT = 1 << 30  # trivalent vertices encode after every leg label


def _orders(kind, s):
    """Slot orders tried when entering a vertex at slot ``s``, with their signs."""
    if kind != INTERNAL:
        return (((s,), 1),)
    return (((s, (s + 1) % 3, (s + 2) % 3), 1), ((s, (s + 2) % 3, (s + 1) % 3), -1))


def _canonical_component(kinds, adj, comp):
    """Minimal breadth-first code of a connected component.

    A traversal numbers half-edges in discovery order, entering each new
    vertex at the half-edge it was reached by; every trivalent vertex is
    tried in both orientations, which is where the AS sign comes from.
    Branches whose partial code already exceeds the best one are cut.
    Returns ``(code, sign, visits)``; ``sign`` is 0 when two minimal
    traversals disagree on orientation.
    """
    legs = [v for v in comp if kinds[v] != INTERNAL]
    if legs:
        low = min(kinds[v] for v in legs)
        starts = [(v, 0) for v in legs if kinds[v] == low]
    else:
        starts = [(v, s) for v in comp for s in range(3)]

    best: list = [None, set(), None]  # code, signs, visits

    def token(kind):
        return _LEG_LIMIT if kind == INTERNAL else kind

    def run(index, seq, visits, code, sign, p):
        ref = best[0]
        tied = ref is not None and tuple(code) == ref[:len(code)]
        if ref is not None and not tied and tuple(code) > ref[:len(code)]:
            return

        def push(x):
            nonlocal tied
            code.append(x)
            if tied:
                r = ref[len(code) - 1]
                if x > r:
                    return False
                if x < r:
                    tied = False
            return True

        while p < len(seq):
            v, s = seq[p]
            e = adj[v][s]
            if e not in index:
                w, t = e
                if not push(token(kinds[w])):
                    return
                choices = _orders(kinds[w], t)
                if len(choices) > 1:
                    code.pop()
                    for order, sg in choices:
                        idx2 = dict(index)
                        seq2 = list(seq)
                        for sl in order:
                            idx2[(w, sl)] = len(seq2)
                            seq2.append((w, sl))
                        code2 = code + [_LEG_LIMIT, idx2[e]]
                        run(idx2, seq2, visits + [(w, order)], code2, sign * sg, p + 1)
                    return
                visits.append((w, (t,)))
                index[e] = len(seq)
                seq.append(e)
            if not push(index[e]):
                return
            p += 1
        final = tuple(code)
        if best[0] is None or final < best[0]:
            best[0], best[1], best[2] = final, {sign}, visits
        elif final == best[0]:
            best[1].add(sign)

    for v0, s0 in starts:
        for order, sg in _orders(kinds[v0], s0):
            index = {(v0, sl): i for i, sl in enumerate(order)}
            seq = [(v0, sl) for sl in order]
            run(index, seq, [(v0, order)], [token(kinds[v0])], sg, 0)
    code, signs, visits = best
    sign = 0 if len(signs) > 1 else next(iter(signs))
    return code, sign, visits


@lru_cache(maxsize=200_000)
def canonicalize(d: Character) -> tuple[Character, int]:
    """Canonical AS representative ``c`` and sign ``s`` with ``d = s * c``.

    ``s == 0`` when AS forces ``d`` to vanish, i.e. when ``d`` has an
    orientation-reversing automorphism (tadpoles are the basic case).
    """
    kinds, adj = d.kinds, d.adj
    parts = []
    sign = 1
    for comp in d.components():
        code, s, visits = _canonical_component(kinds, adj, comp)
        sign *= s
        parts.append((code, visits))
    parts.sort(key=lambda p: p[0])

    new_end: dict[tuple[int, int], tuple[int, int]] = {}
    order: list[tuple[int, tuple[int, ...]]] = []
    for _, visits in parts:
        for v, slots in visits:
            nv = len(order)
            order.append((v, slots))
            for j, s in enumerate(slots):
                new_end[(v, s)] = (nv, j)
    new_kinds = tuple(kinds[v] for v, _ in order)
    new_adj = tuple(tuple(new_end[adj[v][s]] for s in slots) for v, slots in order)
    return Character(new_kinds, new_adj, d.circles), sign


# -- linear combinations ----------------------------------------------

class CharCombo:
    """Finite Q-linear combination of canonical characters."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Character, Fraction] | None = None):
        self._terms: dict[Character, Fraction] = {}
        if terms:
            for d, c in terms.items():
                self._accumulate(d, Fraction(c))

    def _accumulate(self, d: Character, c: Fraction) -> None:
        if c == 0:
            return
        canon, s = canonicalize(d)
        if s == 0:
            return
        total = self._terms.get(canon, Fraction(0)) + s * c
        if total == 0:
            self._terms.pop(canon, None)
        else:
            self._terms[canon] = total

    @classmethod
    def of(cls, d: Character, coeff=1) -> "CharCombo":
        return cls({d: Fraction(coeff)})

    @classmethod
    def scalar(cls, value) -> "CharCombo":
        return cls({EMPTY: Fraction(value)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Character, Fraction]]) -> "CharCombo":
        out = cls()
        for d, c in pairs:
            out._accumulate(d, Fraction(c))
        return out

    # -- container protocol -------------------------------------------

    def items(self) -> Iterator[tuple[Character, Fraction]]:
        return iter(sorted(self._terms.items(), key=_term_key))

    def __iter__(self):
        return (d for d, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, d: Character) -> Fraction:
        canon, s = canonicalize(d)
        if s == 0:
            return Fraction(0)
        return s * self._terms.get(canon, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, CharCombo):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "CharCombo") -> "CharCombo":
        out = CharCombo()
        out._terms = dict(self._terms)
        for d, c in other._terms.items():
            total = out._terms.get(d, Fraction(0)) + c
            if total == 0:
                out._terms.pop(d, None)
            else:
                out._terms[d] = total
        return out

    def __neg__(self) -> "CharCombo":
        return self.scale(-1)

    def __sub__(self, other: "CharCombo") -> "CharCombo":
        return self + other.scale(-1)

    def scale(self, r) -> "CharCombo":
        r = Fraction(r)
        out = CharCombo()
        if r != 0:
            out._terms = {d: c * r for d, c in self._terms.items()}
        return out

    def __rmul__(self, r) -> "CharCombo":
        return self.scale(r)

    def __mul__(self, other):
        if isinstance(other, CharCombo):
            return self.product(other)
        return self.scale(other)

    def product(self, other: "CharCombo") -> "CharCombo":
        """Bilinear extension of disjoint union."""
        out = CharCombo()
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                out._accumulate(disjoint_union(a, b), ca * cb)
        return out

    def power(self, k: int) -> "CharCombo":
        out = CharCombo.scalar(1)
        for _ in range(k):
            out = out.product(self)
        return out

    def degree_part(self, k: int) -> "CharCombo":
        out = CharCombo()
        out._terms = {d: c for d, c in self._terms.items() if d.degree == k}
        return out

    def degrees(self) -> set[int]:
        return {d.degree for d in self._terms}

    def map_terms(self, fn) -> "CharCombo":
        """Apply a linear map given on characters as ``fn(d) -> CharCombo``."""
        out = CharCombo()
        for d, c in self._terms.items():
            out = out + fn(d).scale(c)
        return out

    # -- text form ----------------------------------------------------

    def serialize(self) -> str:
        blocks = []
        for d, c in self.items():
            blocks.append(f"coeff={format_rational(c)}\n{d.serialize()}")
        return "\n\n".join(blocks)

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_rational(c)}*<deg {d.degree}, {d.n_legs} legs>"
                          for d, c in self.items())
        return f"CharCombo({inner})"


def _term_key(item):
    d, _ = item
    return (d.degree, d.n_legs, d.circles, d.kinds, d.adj)
