"""Joining same-label legs in pairs and evaluating free circles.

``big_j`` sums over every perfect matching of the legs with one label;
``little_j`` does the same but only for terms with exactly ``2n`` such
legs.  Composing ``little_j`` over all labels evaluates the LMO map on
characters, with every free circle replaced by ``-2n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .diagrams import Character, CharCombo

__all__ = [
    "PairingContext",
    "PairingError",
    "perfect_matchings",
    "join_legs",
    "big_j",
    "little_j",
    "iota_n",
    "theta_power_coefficient",
]


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class PairingContext:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PairingError(f"truncation degree must be positive, got {self.n}")

    @property
    def circle_value(self) -> Fraction:
        return Fraction(-2 * self.n)


def perfect_matchings(items: Sequence) -> Iterator[list[tuple]]:
    """All perfect matchings; the first item is paired with each other item in turn."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for idx in range(len(rest)):
        pair = (first, rest[idx])
        for tail in perfect_matchings(rest[:idx] + rest[idx + 1:]):
            yield [pair] + tail


def join_legs(d: Character, matching: Iterable[tuple[int, int]]) -> Character:
    """Join the matched legs of ``d`` into edges.

    A joined pair whose two legs were the ends of one dashed arc becomes a
    free circle, counted in ``circles``.  Returned characters are not
    canonicalized.
    """
    adj = [list(row) for row in d.adj]
    removed = set()
    circles = d.circles
    for a, b in matching:
        pa = adj[a][0]
        pb = adj[b][0]
        if pa == (b, 0):
            circles += 1
        else:
            adj[pa[0]][pa[1]] = pb
            adj[pb[0]][pb[1]] = pa
        removed.add(a)
        removed.add(b)
    keep = [v for v in range(len(d.kinds)) if v not in removed]
    renum = {v: i for i, v in enumerate(keep)}
    kinds = tuple(d.kinds[v] for v in keep)
    new_adj = tuple(tuple((renum[w], t) for w, t in adj[v]) for v in keep)
    return Character(kinds, new_adj, circles)


def _close_label(d: Character, label: int, ctx: PairingContext) -> list[tuple[Character, Fraction]]:
    legs = d.legs_with_label(label)
    if len(legs) % 2:
        raise PairingError(f"{len(legs)} legs labeled {label}; cannot pair an odd number")
    out = []
    for matching in perfect_matchings(legs):
        joined = join_legs(d, matching)
        factor = ctx.circle_value ** joined.circles
        out.append((joined.without_circles(), factor))
    return out


def big_j(x: CharCombo, label: int, ctx: PairingContext) -> CharCombo:
    """Sum over all matchings of the ``label`` legs, whatever their number."""
    pairs = []
    for d, c in x.items():
        for joined, factor in _close_label(d, label, ctx):
            pairs.append((joined, c * factor))
    return CharCombo.from_pairs(pairs)


def little_j(x: CharCombo, label: int, ctx: PairingContext) -> CharCombo:
    """Like :func:`big_j`, but zero on terms without exactly ``2n`` such legs."""
    pairs = []
    for d, c in x.items():
        if len(d.legs_with_label(label)) != 2 * ctx.n:
            continue
        for joined, factor in _close_label(d, label, ctx):
            pairs.append((joined, c * factor))
    return CharCombo.from_pairs(pairs)


def iota_n(x: CharCombo, labels: Iterable[int], ctx: PairingContext) -> CharCombo:
    """Close every label in turn; the result consists of closed diagrams."""
    for label in labels:
        x = little_j(x, label, ctx)
    return x


def theta_power_coefficient(x: CharCombo, n: int) -> Fraction:
    from .generators import theta_power
    return x.coefficient(theta_power(n))


def matching_count(d: Character, label: int) -> int:
    return sum(1 for _ in perfect_matchings(d.legs_with_label(label)))
