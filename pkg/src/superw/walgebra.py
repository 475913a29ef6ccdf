"""The Lie superalgebra of superderivations of a rank-n Grassmann algebra.

Elements are sums sum_i P_i d_i with P_i Grassmann polynomials, acting on
the algebra by f -> sum_i P_i * d_i(f).  A basis term is a pair
(monomial mask, target index j) standing for x^mask d_j.  The term has
Z-degree |mask| - 1 and parity (|mask| - 1) mod 2; components range over
degrees -1 .. n-1 with dim_k = C(n, k+1) * n.

The superbracket is operator composition:

    [x, y] = x o y - (-1)^{p(x) p(y)} y o x.

On basis terms the composition collapses to the closed form

    [x^a d_j, x^b d_l] = x^a d_j(x^b) d_l - (-1)^{p(x)p(y)} x^b d_l(x^a) d_j

because the second-order parts of the two compositions cancel; the test
suite checks this identity against literal composition on every basis
monomial at low rank.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import (
    InhomogeneousError,
    NonBasisElementError,
    RankMismatchError,
)
from .grassmann import (
    Coeff,
    GrassmannElement,
    Monomial,
    degree,
    format_monomial,
    indices_of,
    merge_sign,
    parse_monomial,
    removal_sign,
)
from .weights import ORDER_KINDS, Weight, order_sequence

Term = tuple[Monomial, int]


def term_degree(term: Term) -> int:
    return term[0].bit_count() - 1


def term_parity(term: Term) -> int:
    return (term[0].bit_count() - 1) & 1


def term_weight(term: Term) -> Weight:
    mask, j = term
    return Weight([(i, 1) for i in indices_of(mask)] + [(j, -1)])


def term_key(term: Term) -> tuple[int, int, int]:
    """Deterministic order on basis terms: by degree, then mask, then target."""
    return (term_degree(term), term[0], term[1])


def format_term(term: Term) -> str:
    mask, j = term
    if mask == 0:
        return f"d{j}"
    return f"{format_monomial(mask)} d{j}"


class WElement:
    """Rational combination of basis terms at a fixed rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Union[Mapping[Term, Coeff], Iterable[tuple[Term, Coeff]], None] = None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank
        acc: dict[Term, Coeff] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for t, c in items:
                mask, j = t
                if not (1 <= j <= rank) or mask >> rank:
                    raise ValueError(f"term {t} out of range at rank {rank}")
                if c:
                    nc = acc.get(t, 0) + c
                    if nc:
                        acc[t] = nc
                    else:
                        acc.pop(t, None)
        self.terms = acc

    @classmethod
    def basis_term(cls, rank: int, mask: Monomial, j: int, coeff: Coeff = 1) -> "WElement":
        return cls(rank, {(mask, j): coeff})

    @classmethod
    def partial(cls, rank: int, j: int) -> "WElement":
        return cls(rank, {(0, j): 1})

    @classmethod
    def matrix_unit(cls, rank: int, i: int, j: int) -> "WElement":
        """The degree-zero element x_i d_j, the image of the matrix unit E_ij."""
        return cls(rank, {(1 << (i - 1), j): 1})

    def _check(self, other: "WElement"):
        if self.rank != other.rank:
            raise RankMismatchError(f"ranks differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "WElement") -> "WElement":
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            nc = out.get(t, 0) + c
            if nc:
                out[t] = nc
            else:
                out.pop(t, None)
        return WElement(self.rank, out)

    def __sub__(self, other: "WElement") -> "WElement":
        return self + (-other)

    def __neg__(self) -> "WElement":
        return WElement(self.rank, {t: -c for t, c in self.terms.items()})

    def __mul__(self, other) -> "WElement":
        if isinstance(other, Rational):
            if not other:
                return WElement(self.rank)
            return WElement(self.rank, {t: c * other for t, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_welement(self)

    def __repr__(self) -> str:
        return f"WElement({self.rank}, {self.terms!r})"


def basis_terms(n: int, k: int | None = None) -> list[Term]:
    """Basis terms at rank n, optionally restricted to Z-degree k."""
    if k is None:
        out = [(m, j) for m in range(1 << n) for j in range(1, n + 1)]
    else:
        if not (-1 <= k <= n - 1):
            return []
        out = [
            (m, j)
            for m in range(1 << n)
            if m.bit_count() == k + 1
            for j in range(1, n + 1)
        ]
    out.sort(key=term_key)
    return out


def component_dim(n: int, k: int) -> int:
    return comb(n, k + 1) * n if -1 <= k <= n - 1 else 0


def basis_of_component(n: int, k: int) -> list[WElement]:
    return [WElement.basis_term(n, m, j) for m, j in basis_terms(n, k)]


def bracket(x: WElement, y: WElement) -> WElement:
    """Superbracket by composition; see the module docstring for the
    collapsed closed form evaluated here."""
    x._check(y)
    out: dict[Term, Coeff] = {}

    def accumulate(t: Term, c: Coeff):
        nc = out.get(t, 0) + c
        if nc:
            out[t] = nc
        else:
            out.pop(t, None)

    for (a, j), ca in x.terms.items():
        pa = (a.bit_count() - 1) & 1
        jbit_a = 1 << (j - 1)
        for (b, l), cb in y.terms.items():
            pb = (b.bit_count() - 1) & 1
            c = ca * cb
            if b & jbit_a:
                rem = b ^ jbit_a
                s = removal_sign(j, b) * merge_sign(a, rem)
                if s:
                    accumulate((a | rem, l), s * c)
            lbit = 1 << (l - 1)
            if a & lbit:
                rem = a ^ lbit
                s = removal_sign(l, a) * merge_sign(b, rem)
                if s:
                    sign = 1 if (pa and pb) else -1
                    accumulate((b | rem, j), sign * s * c)
    return WElement(x.rank, out)


def w_apply(x: WElement, f: GrassmannElement) -> GrassmannElement:
    """Action of a superderivation on a Grassmann element."""
    out: dict[Monomial, Coeff] = {}
    for (a, j), c in x.terms.items():
        jbit = 1 << (j - 1)
        for m, cm in f.terms.items():
            if not m & jbit:
                continue
            rem = m ^ jbit
            s = removal_sign(j, m) * merge_sign(a, rem)
            if s:
                key = a | rem
                nc = out.get(key, 0) + s * c * cm
                if nc:
                    out[key] = nc
                else:
                    out.pop(key, None)
    return GrassmannElement(out)


def z_degree(x: WElement) -> int:
    if not x.terms:
        raise InhomogeneousError("zero element has no degree")
    degs = {term_degree(t) for t in x.terms}
    if len(degs) != 1:
        raise InhomogeneousError(f"element mixes degrees {sorted(degs)}")
    return degs.pop()


def parity(x: WElement) -> int:
    if not x.terms:
        raise InhomogeneousError("zero element has no parity")
    ps = {term_parity(t) for t in x.terms}
    if len(ps) != 1:
        raise InhomogeneousError("element mixes parities")
    return ps.pop()


def weight_of(x: WElement) -> Weight:
    if len(x.terms) != 1:
        raise NonBasisElementError("weight defined for scalar multiples of basis terms")
    (t,) = x.terms
    return term_weight(t)


def graded_jacobi_defect(x: WElement, y: WElement, z: WElement, bracket_fn=bracket) -> WElement:
    """(-1)^{p(x)p(z)}[x,[y,z]] + cyclic; zero exactly when Jacobi holds."""
    px, py, pz = parity(x), parity(y), parity(z)

    def sgn(p, q):
        return -1 if p & q else 1

    return (
        sgn(px, pz) * bracket_fn(x, bracket_fn(y, z))
        + sgn(py, px) * bracket_fn(y, bracket_fn(z, x))
        + sgn(pz, py) * bracket_fn(z, bracket_fn(x, y))
    )


@dataclass(frozen=True)
class BorelOrder:
    """A Borel datum: an index order on 1..n plus an extension flag.

    extension selects which operators count as raising beyond the positive
    degree-zero root vectors: "zero" adds nothing, "min" adjoins the d_i,
    "max" adjoins every basis term of positive Z-degree.
    """

    kind: str
    rank: int
    extension: str = "zero"

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.extension not in ("zero", "min", "max"):
            raise ValueError(f"unknown extension {self.extension!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def sequence(self) -> list[int]:
        return order_sequence(self.kind, self.rank)

    def positive_pairs(self) -> list[tuple[int, int]]:
        """(i, j) with i strictly before j in the order; the root is e_i - e_j."""
        seq = self.sequence()
        return [(seq[s], seq[t]) for s in range(len(seq)) for t in range(s + 1, len(seq))]

    def simple_pairs(self) -> list[tuple[int, int]]:
        seq = self.sequence()
        return list(zip(seq, seq[1:]))


def raising_terms(b: BorelOrder) -> list[Term]:
    n = b.rank
    out: list[Term] = [(1 << (i - 1), j) for i, j in b.positive_pairs()]
    if b.extension == "min":
        out += [(0, j) for j in range(1, n + 1)]
    elif b.extension == "max":
        out += [t for t in basis_terms(n) if term_degree(t) >= 1]
    return out


def raising_operators(b: BorelOrder) -> list[WElement]:
    return [WElement.basis_term(b.rank, m, j) for m, j in raising_terms(b)]


def nilradical_generating_terms(b: BorelOrder) -> list[Term]:
    """A Lie-generating subset of the raising terms: simple positive root
    vectors plus, for the max extension, the degree-one component.  A joint
    kernel over this set coincides with the joint kernel over all raising
    operators; the test suite verifies the generation claim at low rank."""
    n = b.rank
    out: list[Term] = [(1 << (i - 1), j) for i, j in b.simple_pairs()]
    if b.extension == "min":
        out += [(0, j) for j in range(1, n + 1)]
    elif b.extension == "max":
        out += basis_terms(n, 1)
    return out


_TERM_RE = re.compile(
    r"^\s*(?P<coeff>[+-]?\d+(?:/\d+)?)?\s*\*?\s*(?P<mono>(?:x\d+(?:\^x\d+)*)?)\s*(?:d(?P<target>\d+))\s*$"
)


def format_welement(x: WElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for t in sorted(x.terms, key=term_key):
        c = Fraction(x.terms[t])
        mag = abs(c)
        body = format_term(t)
        if mag != 1:
            body = f"{mag}*{body}"
        parts.append(("- " if c < 0 else "+ ") + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def parse_welement(text: str, rank: int) -> WElement:
    """Parse e.g. "x1^x3 d2", "3/2*x1 d2 - d1"."""
    text = text.strip()
    if text in ("", "0"):
        return WElement(rank)
    # split into signed chunks at top level
    chunks: list[str] = []
    buf = ""
    for tok in re.split(r"\s+", text):
        if tok in ("+", "-"):
            if buf:
                chunks.append(buf)
            buf = "" if tok == "+" else "-"
        else:
            buf = f"{buf} {tok}".strip() if buf not in ("", "-") else buf + tok
    if buf:
        chunks.append(buf)
    terms: dict[Term, Coeff] = {}
    for chunk in chunks:
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        coeff: Coeff = 1
        if m.group("coeff"):
            coeff = Fraction(m.group("coeff"))
            if coeff.denominator == 1:
                coeff = int(coeff)
        mono = parse_monomial(m.group("mono")) if m.group("mono") else 0
        j = int(m.group("target"))
        t = (mono, j)
        c = -coeff if neg else coeff
        terms[t] = terms.get(t, 0) + c
    return WElement(rank, terms)


def grading_element(n: int, upto: int | None = None) -> WElement:
    """The diagonal element sum_{i<=N} x_i d_i; its eigenvalue on a weight
    vector is the sum of the first N weight coordinates."""
    upto = n if upto is None else upto
    return WElement(n, {((1 << (i - 1)), i): 1 for i in range(1, upto + 1)})
