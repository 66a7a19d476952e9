"""Named generator characters and the truncated exponential.

Orientation conventions are pinned so that joining the i-legs of two
tripods ``W_12i`` gives ``-H_12``, closing ``H_12`` gives ``+Theta`` and
closing the two-wheel gives ``+Theta``.  Those are the only sign
conventions the surgery computations depend on; the flip flags below
record which stored orientation realizes them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .diagrams import Character, CharCombo, EMPTY, disjoint_union

__all__ = [
    "GeneratorError",
    "LegBudget",
    "strut",
    "tripod",
    "hbar",
    "wheel2",
    "theta",
    "theta_power",
    "exp_truncated",
    "strut_power",
]

FLIP_HBAR = True
FLIP_WHEEL2 = True
FLIP_THETA = True


class GeneratorError(ValueError):
    pass


def _labels(*labels):
    for x in labels:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise GeneratorError(f"label {x!r} is not a positive integer")


def strut(i: int) -> Character:
    _labels(i)
    return Character.build((i, i), [(0, 1)])


def tripod(i: int, j: int, k: int) -> Character:
    _labels(i, j, k)
    if len({i, j, k}) != 3:
        raise GeneratorError(f"tripod labels must be distinct, got {(i, j, k)}")
    return Character.build((0, i, j, k), [(0, 1), (0, 2), (0, 3)])


def hbar(i: int, j: int) -> Character:
    _labels(i, j)
    if i == j:
        raise GeneratorError(f"H labels must differ, got {(i, j)}")
    # vertex 0: (i-leg, j-leg, bridge); vertex 1: (bridge, i-leg, j-leg)
    d = Character.build((0, 0, i, j, i, j), [(0, 2), (0, 3), (0, 1), (1, 4), (1, 5)])
    return d.flip(0) if FLIP_HBAR else d


def wheel2(i: int) -> Character:
    _labels(i)
    d = Character.build((0, 0, i, i), [(0, 1), (0, 1), (0, 2), (1, 3)])
    return d.flip(0) if FLIP_WHEEL2 else d


def theta() -> Character:
    d = Character.build((0, 0), [(0, 1)] * 3)
    return d.flip(0) if FLIP_THETA else d


def theta_power(n: int) -> Character:
    out = EMPTY
    for _ in range(n):
        out = disjoint_union(out, theta())
    return out


def strut_power(i: int, k: int) -> Character:
    out = EMPTY
    for _ in range(k):
        out = disjoint_union(out, strut(i))
    return out


@dataclass(frozen=True)
class LegBudget:
    """Exact leg count per label and a cap on trivalent vertices."""

    per_label: int
    max_internal: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.per_label < 0 or self.per_label % 2:
            raise GeneratorError(f"per-label leg count must be even, got {self.per_label}")
        if self.max_internal < 0:
            raise GeneratorError("max_internal must be nonnegative")

    @classmethod
    def for_degree(cls, n: int, ell: int) -> "LegBudget":
        return cls(2 * n, 2 * n, tuple(range(1, ell + 1)))


def exp_truncated(x: CharCombo, budget: LegBudget) -> CharCombo:
    """Disjoint-union exponential of ``x`` keeping only monomials within budget.

    A multiset of terms is kept when every label in the budget receives
    exactly ``per_label`` legs and the trivalent vertices number at most
    ``max_internal``.  Each kept multiset contributes the product of its
    coefficients over the product of multiplicity factorials.
    """
    labels = budget.labels
    terms = []
    for d, c in x.items():
        counts = d.leg_counts()
        if any(lab not in labels for lab in counts):
            continue
        terms.append((d, c, tuple(counts.get(lab, 0) for lab in labels), d.n_internal))
    if not terms:
        return CharCombo()

    # labels still reachable from terms[t:]
    reach = [set() for _ in range(len(terms) + 1)]
    for t in range(len(terms) - 1, -1, -1):
        reach[t] = reach[t + 1] | {a for a, cnt in enumerate(terms[t][2]) if cnt}

    out = []
    need0 = tuple(budget.per_label for _ in labels)

    def rec(t, need, room, chosen):
        if t == len(terms):
            if all(v == 0 for v in need):
                out.append(list(chosen))
            return
        if any(v and a not in reach[t] for a, v in enumerate(need)):
            return
        d, c, legs, internal = terms[t]
        rec(t + 1, need, room, chosen)
        m = 0
        cur = need
        while True:
            m += 1
            room_left = room - m * internal
            cur = tuple(v - l for v, l in zip(cur, legs))
            if room_left < 0 or any(v < 0 for v in cur):
                break
            if not any(legs) and internal == 0:
                break
            chosen.append((t, m))
            rec(t + 1, cur, room_left, chosen)
            chosen.pop()

    rec(0, need0, budget.max_internal, [])

    pairs = []
    for chosen in out:
        coeff = Fraction(1)
        diagram = EMPTY
        for t, m in chosen:
            d, c = terms[t][0], terms[t][1]
            coeff *= c ** m / factorial(m)
            for _ in range(m):
                diagram = disjoint_union(diagram, d)
        pairs.append((diagram, coeff))
    return CharCombo.from_pairs(pairs)
