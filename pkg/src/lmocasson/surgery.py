"""Algebraically split framed links as surgery data."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Mapping

__all__ = [
    "PresentationError",
    "PreconditionError",
    "SurgeryPresentation",
    "DerivedStats",
    "parse_presentation",
    "derived_stats",
    "normalize_b2",
    "disjoint_sum",
]


class PresentationError(ValueError):
    """Malformed or invalid surgery data."""


class PreconditionError(ValueError):
    """Valid data that an operation cannot accept (e.g. wrong Betti number)."""


@dataclass(frozen=True)
class SurgeryPresentation:
    """Framings, Milnor invariants and Alexander coefficients of a link.

    ``mu3`` maps sorted triples ``(i, j, k)`` to the triple Milnor invariant
    and ``mu22`` maps sorted pairs ``(i, j)`` to the invariant mu_iijj.
    ``a1`` holds half the second derivative at 1 of each component's
    Alexander polynomial.  Indices are 1-based.  Pairwise linking numbers
    are zero by assumption.
    """

    framings: tuple[int, ...]
    mu3: Mapping[tuple[int, int, int], int] = field(default_factory=dict)
    mu22: Mapping[tuple[int, int], int] = field(default_factory=dict)
    a1: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        framings = tuple(self.framings)
        ell = len(framings)
        if ell < 1:
            raise PresentationError("components: need at least one component")
        for f in framings:
            if isinstance(f, bool) or not isinstance(f, int):
                raise PresentationError(f"framings: {f!r} is not an integer")
        a1 = self.a1
        if a1 is None:
            a1 = (Fraction(0),) * ell
        a1 = tuple(Fraction(x) for x in a1)
        if len(a1) != ell:
            raise PresentationError(f"a1: expected {ell} entries, got {len(a1)}")
        mu3 = {}
        for key, val in dict(self.mu3).items():
            _check_key("mu3", key, 3, ell)
            _check_int("mu3", val)
            if val:
                mu3[tuple(key)] = val
        mu22 = {}
        for key, val in dict(self.mu22).items():
            _check_key("mu22", key, 2, ell)
            _check_int("mu22", val)
            if val:
                mu22[tuple(key)] = val
        object.__setattr__(self, "framings", framings)
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "mu3", mu3)
        object.__setattr__(self, "mu22", mu22)

    @property
    def components(self) -> int:
        return len(self.framings)

    def framing(self, i: int) -> int:
        return self.framings[i - 1]

    def triple(self, i: int, j: int, k: int) -> int:
        return self.mu3.get(tuple(sorted((i, j, k))), 0)

    def quadruple(self, i: int, j: int) -> int:
        return self.mu22.get(tuple(sorted((i, j))), 0)

    def alexander(self, i: int) -> Fraction:
        return self.a1[i - 1]

    def to_document(self) -> dict:
        doc = {"components": self.components, "framings": list(self.framings)}
        if self.mu3:
            doc["mu3"] = [{"i": i, "j": j, "k": k, "value": v}
                          for (i, j, k), v in sorted(self.mu3.items())]
        if self.mu22:
            doc["mu22"] = [{"i": i, "j": j, "value": v}
                           for (i, j), v in sorted(self.mu22.items())]
        if any(self.a1):
            doc["a1"] = [str(x) for x in self.a1]
        return doc


def _check_int(name, val):
    if isinstance(val, bool) or not isinstance(val, int):
        raise PresentationError(f"{name}: value {val!r} is not an integer")


def _check_key(name, key, size, ell):
    key = tuple(key)
    if len(key) != size:
        raise PresentationError(f"{name}: key {key} must have {size} indices")
    for idx in key:
        if isinstance(idx, bool) or not isinstance(idx, int):
            raise PresentationError(f"{name}: index {idx!r} is not an integer")
        if not 1 <= idx <= ell:
            raise PresentationError(f"{name}: index {idx} out of range 1..{ell}")
    if any(a >= b for a, b in zip(key, key[1:])):
        raise PresentationError(f"{name}: key {key} is not strictly increasing")


# -- JSON ingestion ---------------------------------------------------

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise PresentationError(f"{where}: {value!r} is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise PresentationError(f"{where}: zero denominator in {value!r}") from None
    raise PresentationError(f"{where}: {value!r} is not an integer or 'p/q' string")


def _expect_fields(obj, allowed, required, where):
    if not isinstance(obj, dict):
        raise PresentationError(f"{where}: expected an object")
    extra = set(obj) - set(allowed)
    if extra:
        raise PresentationError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = [f for f in required if f not in obj]
    if missing:
        raise PresentationError(f"{where}: missing field(s) {missing}")


def parse_presentation(data: bytes | str) -> SurgeryPresentation:
    """Parse and validate a JSON surgery document."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PresentationError(f"input is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"invalid JSON: {exc}") from None
    _expect_fields(doc, ("components", "framings", "mu3", "mu22", "a1"),
                   ("components", "framings"), "document")

    ell = doc["components"]
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 1:
        raise PresentationError(f"components: {ell!r} is not an integer >= 1")
    framings = doc["framings"]
    if not isinstance(framings, list) or len(framings) != ell:
        raise PresentationError(f"framings: expected an array of {ell} integers")
    for f in framings:
        _check_int("framings", f)

    mu3: dict[tuple[int, int, int], int] = {}
    for n, entry in enumerate(doc.get("mu3", [])):
        where = f"mu3[{n}]"
        _expect_fields(entry, ("i", "j", "k", "value"), ("i", "j", "k", "value"), where)
        key = (entry["i"], entry["j"], entry["k"])
        _check_key(where, key, 3, ell)
        _check_int(where, entry["value"])
        if key in mu3:
            raise PresentationError(f"{where}: duplicate key {key}")
        mu3[key] = entry["value"]

    mu22: dict[tuple[int, int], int] = {}
    for n, entry in enumerate(doc.get("mu22", [])):
        where = f"mu22[{n}]"
        _expect_fields(entry, ("i", "j", "value"), ("i", "j", "value"), where)
        key = (entry["i"], entry["j"])
        _check_key(where, key, 2, ell)
        _check_int(where, entry["value"])
        if key in mu22:
            raise PresentationError(f"{where}: duplicate key {key}")
        mu22[key] = entry["value"]

    a1 = None
    if "a1" in doc:
        raw = doc["a1"]
        if not isinstance(raw, list) or len(raw) != ell:
            raise PresentationError(f"a1: expected an array of {ell} entries")
        a1 = tuple(_parse_rational(x, f"a1[{n}]") for n, x in enumerate(raw))

    return SurgeryPresentation(tuple(framings), mu3, mu22, a1)


# -- derived quantities -----------------------------------------------

@dataclass(frozen=True)
class DerivedStats:
    b1: int
    sigma_plus: int
    sigma_minus: int
    h1_order: int
    torsion_order: int


def derived_stats(s: SurgeryPresentation) -> DerivedStats:
    f = s.framings
    nonzero = [x for x in f if x]
    b1 = len(f) - len(nonzero)
    torsion = abs(prod(nonzero))
    return DerivedStats(
        b1=b1,
        sigma_plus=sum(1 for x in f if x > 0),
        sigma_minus=sum(1 for x in f if x < 0),
        h1_order=torsion if b1 == 0 else 0,
        torsion_order=torsion,
    )


def relabel(s: SurgeryPresentation, perm: tuple[int, ...]) -> SurgeryPresentation:
    """Rename component ``i`` as ``perm[i-1]``.

    Triple invariants keep their value on the re-sorted key (consumers only
    use them squared or with fixed labels 1, 2).
    """
    ell = s.components
    if sorted(perm) != list(range(1, ell + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{ell}")
    framings = [0] * ell
    a1 = [Fraction(0)] * ell
    for old in range(1, ell + 1):
        framings[perm[old - 1] - 1] = s.framing(old)
        a1[perm[old - 1] - 1] = s.alexander(old)
    mu3 = {tuple(sorted(perm[i - 1] for i in key)): v for key, v in s.mu3.items()}
    mu22 = {tuple(sorted(perm[i - 1] for i in key)): v for key, v in s.mu22.items()}
    return SurgeryPresentation(tuple(framings), mu3, mu22, tuple(a1))


def normalize_b2(s: SurgeryPresentation) -> tuple[SurgeryPresentation, tuple[int, ...]]:
    """Relabel so the two zero-framed components are 1 and 2.

    Returns the relabeled presentation and the permutation ``perm`` with
    old label ``i`` sent to ``perm[i-1]``.  Relative order is kept within
    the zero-framed and nonzero-framed groups.
    """
    if derived_stats(s).b1 != 2:
        raise PreconditionError(f"normalize_b2 needs b1 = 2, got {derived_stats(s).b1}")
    zeros = [i for i in range(1, s.components + 1) if s.framing(i) == 0]
    rest = [i for i in range(1, s.components + 1) if s.framing(i) != 0]
    perm = [0] * s.components
    for new, old in enumerate(zeros + rest, start=1):
        perm[old - 1] = new
    perm_t = tuple(perm)
    return relabel(s, perm_t), perm_t


def disjoint_sum(a: SurgeryPresentation, b: SurgeryPresentation) -> SurgeryPresentation:
    """Split union of two links; surgery on it is the connected sum."""
    off = a.components
    mu3 = dict(a.mu3)
    mu3.update({(i + off, j + off, k + off): v for (i, j, k), v in b.mu3.items()})
    mu22 = dict(a.mu22)
    mu22.update({(i + off, j + off): v for (i, j), v in b.mu22.items()})
    return SurgeryPresentation(a.framings + b.framings, mu3, mu22, a.a1 + b.a1)
