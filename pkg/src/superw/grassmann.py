"""Exact arithmetic in a finite rank Grassmann algebra.

A monomial in the generators x_1..x_n is an index bitmask: bit i-1 set
means x_i occurs.  Products carry the sign of the permutation sorting the
concatenated index sequences; coefficients are exact rationals (python
ints, widening to Fraction only when division appears upstream).
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import InhomogeneousError

Monomial = int
Coeff = Union[int, Fraction]


def degree(mono: Monomial) -> int:
    return mono.bit_count()


def merge_sign(a: Monomial, b: Monomial) -> int:
    """Sign of x^a * x^b relative to the sorted monomial x^(a|b); 0 on overlap."""
    if a & b:
        return 0
    s = 0
    bb = b
    while bb:
        j = bb & -bb
        # generators of a above position j must jump over x_j
        s += (a >> j.bit_length()).bit_count()
        bb ^= j
    return -1 if s & 1 else 1


def removal_sign(i: int, mono: Monomial) -> int:
    """Sign picked up by the derivation d_i passing to position of x_i."""
    below = mono & ((1 << (i - 1)) - 1)
    return -1 if below.bit_count() & 1 else 1


def mask_of(indices: Iterable[int]) -> Monomial:
    m = 0
    for i in indices:
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated index {i}")
        m |= bit
    return m


def indices_of(mono: Monomial) -> tuple[int, ...]:
    out = []
    i = 1
    while mono:
        if mono & 1:
            out.append(i)
        mono >>= 1
        i += 1
    return tuple(out)


class GrassmannElement:
    """Finite rational combination of square-free monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping[Monomial, Coeff], Iterable[tuple[Monomial, Coeff]], None] = None):
        acc: dict[Monomial, Coeff] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                if c:
                    nc = acc.get(m, 0) + c
                    if nc:
                        acc[m] = nc
                    else:
                        acc.pop(m, None)
        self.terms = acc

    @classmethod
    def unit(cls) -> "GrassmannElement":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "GrassmannElement":
        return cls()

    @classmethod
    def generator(cls, i: int) -> "GrassmannElement":
        return cls({1 << (i - 1): 1})

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: Coeff = 1) -> "GrassmannElement":
        return cls({mask_of(indices): coeff})

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return GrassmannElement(out)

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + (-other)

    def __neg__(self) -> "GrassmannElement":
        return GrassmannElement({m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "GrassmannElement":
        if isinstance(other, GrassmannElement):
            return gmul(self, other)
        if isinstance(other, Rational):
            if not other:
                return GrassmannElement()
            return GrassmannElement({m: c * other for m, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "GrassmannElement":
        if isinstance(other, Rational):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, GrassmannElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        degs = {degree(m) for m in self.terms}
        if len(degs) != 1:
            raise InhomogeneousError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def parity(self) -> int:
        return self.degree() & 1

    def homogeneous_components(self) -> dict[int, "GrassmannElement"]:
        comps: dict[int, dict[Monomial, Coeff]] = {}
        for m, c in self.terms.items():
            comps.setdefault(degree(m), {})[m] = c
        return {d: GrassmannElement(t) for d, t in sorted(comps.items())}

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"GrassmannElement({self.terms!r})"


def gmul(f: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    out: dict[Monomial, Coeff] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            s = merge_sign(a, b)
            if not s:
                continue
            m = a | b
            nc = out.get(m, 0) + s * ca * cb
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
    return GrassmannElement(out)


def apply_partial(i: int, f: GrassmannElement) -> GrassmannElement:
    """Left partial derivative d_i, an odd derivation with d_i(x_j) = delta_ij."""
    bit = 1 << (i - 1)
    out: dict[Monomial, Coeff] = {}
    for m, c in f.terms.items():
        if m & bit:
            out[m ^ bit] = out.get(m ^ bit, 0) + removal_sign(i, m) * c
    return GrassmannElement(out)


def eval_at_zero(f: GrassmannElement) -> Coeff:
    """Constant term."""
    return f.terms.get(0, 0)


def basis(n: int, k: int | None = None) -> list[Monomial]:
    """All monomial masks at rank n, optionally restricted to degree k."""
    if k is None:
        return list(range(1 << n))
    return [m for m in range(1 << n) if m.bit_count() == k]


def format_monomial(mono: Monomial) -> str:
    if mono == 0:
        return "1"
    return "^".join(f"x{i}" for i in indices_of(mono))


_MONO_RE = re.compile(r"^x(\d+)(?:\^x(\d+))*$")


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return 0
    parts = text.split("^")
    idx = []
    for p in parts:
        p = p.strip()
        if not p.startswith("x"):
            raise ValueError(f"bad monomial factor {p!r} in {text!r}")
        idx.append(int(p[1:]))
    if idx != sorted(idx):
        raise ValueError(f"monomial indices not ascending in {text!r}")
    return mask_of(idx)


def _format_coeff(c: Coeff) -> str:
    f = Fraction(c)
    return str(f)


def format_element(f: GrassmannElement) -> str:
    if not f.terms:
        return "0"
    parts = []
    for m in sorted(f.terms, key=lambda m: (degree(m), m)):
        c = Fraction(f.terms[m])
        mono = format_monomial(m)
        mag = abs(c)
        if mono == "1":
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        parts.append(("- " if c < 0 else "+ ") + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
