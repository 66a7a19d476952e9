"""LMO invariant in degree one, and in every degree when b1 = 2.

Both computations go through the diagram calculus (logarithm of the
Kontsevich integral on characters, truncated exponential, leg joining)
and are checked against closed formulas in the surgery data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod

from .diagrams import CharCombo, EMPTY
from .generators import (LegBudget, exp_truncated, hbar, strut, theta, tripod, wheel2)
from .lescop import lambda_b2
from .pairing import PairingContext, iota_n, theta_power_coefficient
from .surgery import (PreconditionError, SurgeryPresentation, derived_stats,
                      normalize_b2)

__all__ = [
    "EngineError",
    "Degree1Value",
    "HnElement",
    "b_coefficient",
    "log_character",
    "u_constant",
    "c_of_l",
    "iota1_check",
    "z1",
    "h_n",
    "zn_b2",
    "zn_direct",
]

MAX_HN_DEGREE = 4


class EngineError(AssertionError):
    """A diagram-path result disagreed with its closed form."""


@dataclass(frozen=True)
class Degree1Value:
    theta_coefficient: Fraction


@dataclass(frozen=True)
class HnElement:
    n: int
    combo: CharCombo
    theta_projection: Fraction


def b_coefficient(framing: int, a1) -> Fraction:
    """Coefficient of the two-wheel after absorbing the unknot normalization."""
    return (2 + framing ** 2 - 24 * Fraction(a1)) / Fraction(48)


def log_character(s: SurgeryPresentation, n: int) -> CharCombo:
    """Logarithm of the normalized Kontsevich integral, as far as it matters.

    Struts carry half the framing, tripods minus the triple invariant and H
    diagrams half mu_iijj.  Two-wheels are added only for ``n == 1``; in
    higher degree they cannot fit the leg budget.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    ell = s.components
    pairs = []
    for i in range(1, ell + 1):
        pairs.append((strut(i), Fraction(s.framing(i), 2)))
    for (i, j, k), v in s.mu3.items():
        pairs.append((tripod(i, j, k), Fraction(-v)))
    for (i, j), v in s.mu22.items():
        pairs.append((hbar(i, j), Fraction(v, 2)))
    if n == 1:
        for i in range(1, ell + 1):
            pairs.append((wheel2(i), b_coefficient(s.framing(i), s.alexander(i))))
    return CharCombo.from_pairs(pairs)


def _iota_numerator(s: SurgeryPresentation, n: int) -> CharCombo:
    ell = s.components
    x = exp_truncated(log_character(s, n), LegBudget.for_degree(n, ell))
    return iota_n(x, range(1, ell + 1), PairingContext(n))


def u_constant(sign: int) -> CharCombo:
    """Closure of the normalized integral of the unknot framed ``sign``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _iota_numerator(SurgeryPresentation((sign,)), 1)


def c_of_l(s: SurgeryPresentation) -> Fraction:
    """Closed-form Theta coefficient of the degree-one closure."""
    ell = s.components
    labels = range(1, ell + 1)

    def others(subset):
        return prod(s.framing(t) for t in labels if t not in subset)

    c = Fraction(0)
    for i in labels:
        c -= b_coefficient(s.framing(i), s.alexander(i)) * others((i,))
    for i, j in combinations(labels, 2):
        c += Fraction(s.quadruple(i, j), 2) * others((i, j))
    for i, j, k in combinations(labels, 3):
        c += Fraction(s.triple(i, j, k) ** 2, 2) * others((i, j, k))
    return c


def _low_coefficients(x: CharCombo) -> tuple[Fraction, Fraction]:
    """Empty-diagram and Theta coefficients of a degree <= 1 closed combo."""
    if x.degrees() - {0, 1}:
        raise EngineError(f"unexpected degrees {sorted(x.degrees())} in degree-one closure")
    return x.coefficient(EMPTY), x.coefficient(theta())


def iota1_check(s: SurgeryPresentation) -> CharCombo:
    """Degree-one closure computed by enumeration and checked against its closed form."""
    computed = _iota_numerator(s, 1)
    sign = (-1) ** s.components
    expected = (CharCombo.scalar(sign * prod(s.framings))
                + CharCombo.of(theta(), sign * c_of_l(s)))
    if computed != expected:
        raise EngineError(f"closure {computed!r} differs from closed form {expected!r}")
    return computed


def z1(s: SurgeryPresentation) -> Degree1Value:
    """Degree-one part of the LMO invariant as a multiple of Theta."""
    st = derived_stats(s)
    num0, num1 = _low_coefficients(iota1_check(s))
    den0, den1 = Fraction(1), Fraction(0)
    for sign, power in ((1, st.sigma_plus), (-1, st.sigma_minus)):
        u0, u1 = _low_coefficients(u_constant(sign))
        for _ in range(power):
            den0, den1 = den0 * u0, den0 * u1 + den1 * u0
    # degree-one part of (num0 + num1 T) / (den0 + den1 T)
    value = (num1 * den0 - num0 * den1) / den0 ** 2
    return Degree1Value(value)


def h_n(n: int) -> HnElement:
    """Closure of ``H_12^n / (2^n n!)`` in degree ``n``."""
    if not 1 <= n <= MAX_HN_DEGREE:
        raise ValueError(f"h_n is enumerated for 1 <= n <= {MAX_HN_DEGREE}, got {n}")
    power = CharCombo.of(hbar(1, 2)).power(n)
    combo = iota_n(power, (1, 2), PairingContext(n)).scale(Fraction(1, 2 ** n * factorial(n)))
    proj = theta_power_coefficient(combo, n)
    if proj == 0:
        raise EngineError(f"H_{n} has vanishing Theta^{n} projection")
    return HnElement(n, combo, proj)


def zn_direct(s: SurgeryPresentation, n: int) -> CharCombo:
    """Degree-n LMO invariant for b1 = 2 straight from the diagram calculus.

    The numerator closure must vanish below degree ``n``; the denominator
    then only contributes the sign ``(-1)^(n sigma_+)``.
    """
    st = derived_stats(s)
    if st.b1 != 2:
        raise PreconditionError(f"zn needs b1 = 2, got {st.b1}")
    s, _ = normalize_b2(s)
    numerator = _iota_numerator(s, n)
    low = [k for k in numerator.degrees() if k < n]
    if low:
        raise EngineError(f"numerator has terms in degrees {low} below {n}")
    return numerator.degree_part(n).scale((-1) ** (n * st.sigma_plus))


def zn_b2(s: SurgeryPresentation, n: int, cross_check: bool | None = None) -> CharCombo:
    """``lambda^n H_n`` for b1 = 2, cross-checked by the direct path when ``n <= 2``."""
    if derived_stats(s).b1 != 2:
        raise PreconditionError(f"zn needs b1 = 2, got {derived_stats(s).b1}")
    if not 1 <= n <= 3:
        raise ValueError(f"zn is supported for 1 <= n <= 3, got {n}")
    lam = lambda_b2(s)
    result = h_n(n).combo.scale(lam ** n)
    if cross_check is None:
        cross_check = n <= 2
    if cross_check:
        direct = zn_direct(s, n)
        if direct != result:
            raise EngineError(f"direct path {direct!r} differs from lambda^n H_n {result!r}")
    return result
