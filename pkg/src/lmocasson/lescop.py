"""Casson-Walker-Lescop invariant of surgery on an algebraically split link."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Literal

from .surgery import (PreconditionError, SurgeryPresentation, derived_stats,
                      normalize_b2)

__all__ = ["LambdaValue", "lambda_b2", "lambda_surgery", "lambda_connected_sum", "zeta"]


@dataclass(frozen=True)
class LambdaValue:
    value: Fraction
    path: Literal["lemma1", "surgery"]


def lambda_b2(s: SurgeryPresentation) -> Fraction:
    """Closed formula for first Betti number two.

    With components 1 and 2 zero-framed (after relabeling) this is
    ``|prod_{i>=3} f_i| * (sum_{i>=3} mu_12i^2 / f_i + mu_1122)``.
    """
    if derived_stats(s).b1 != 2:
        raise PreconditionError("lambda_b2 needs exactly two zero framings")
    s, _ = normalize_b2(s)
    rest = range(3, s.components + 1)
    torsion = abs(prod(s.framing(i) for i in rest))
    inner = sum((Fraction(s.triple(1, 2, i) ** 2, s.framing(i)) for i in rest),
                Fraction(s.quadruple(1, 2)))
    return torsion * inner


def zeta(s: SurgeryPresentation, subset: tuple[int, ...]) -> Fraction:
    """Lescop's zeta for a sublink of an algebraically split link.

    Sublinks of four or more components contribute nothing.
    """
    if len(subset) == 1:
        return s.alexander(subset[0]) - Fraction(1, 24)
    if len(subset) == 2:
        return Fraction(s.quadruple(*subset))
    if len(subset) == 3:
        return Fraction(s.triple(*subset) ** 2)
    return Fraction(0)


def lambda_surgery(s: SurgeryPresentation) -> Fraction:
    """Lescop's global surgery formula specialized to split framings."""
    st = derived_stats(s)
    ell = s.components
    labels = range(1, ell + 1)

    def others(subset):
        return prod(s.framing(j) for j in labels if j not in subset)

    bracket = Fraction(0)
    for i in labels:
        bracket += (zeta(s, (i,)) - Fraction(s.framing(i) ** 2 + 1, 24)) * others((i,))
    for size in (2, 3):
        for subset in combinations(labels, size):
            bracket += zeta(s, subset) * others(subset)
    head = Fraction(st.h1_order * (st.sigma_plus - st.sigma_minus), 8)
    return head + (-1) ** st.sigma_minus * bracket


def lambda_connected_sum(value, h1_order_other: int) -> Fraction:
    """Contribution ``lambda_M * |H_1(M')|`` of one summand to a connected sum."""
    return Fraction(value) * h1_order_other
