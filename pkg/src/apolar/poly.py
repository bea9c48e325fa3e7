"""Sparse multivariate polynomials in the ring T = K[x0..xn] and its dual
S = K[y0..yn], the contraction action of S on T, and projective points.

Exponent vectors are plain int tuples of fixed length `nvars`. Terms with
zero coefficient are never stored; the zero form is the empty term map and
carries no degree. Canonical printing and basis enumeration use graded
lexicographic order with x0 > x1 > ... > xn.
"""

import math
import re
from functools import lru_cache

from .errors import (
    ApolarError,
    ArityMismatchError,
    DegreeMismatchError,
    FieldMismatchError,
    NonHomogeneousError,
    ParseError,
    VariableOutOfRangeError,
)

RING_T = "x"  # the x-variables, where forms F live
RING_S = "y"  # the dual y-variables acting on T by contraction


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, k: int):
    """All exponent vectors of total degree k, in lex-descending order.

    The list has C(k + nvars - 1, nvars - 1) entries; the first is
    (k, 0, ..., 0) and the last is (0, ..., 0, k).
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if nvars == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in monomial_basis(nvars - 1, k - first):
            out.append((first,) + rest)
    return tuple(out)


def multinomial(total: int, exponents) -> int:
    coeff = 1
    remaining = total
    for a in exponents:
        coeff *= math.comb(remaining, a)
        remaining -= a
    return coeff


class Form:
    """A sparse polynomial with exact coefficients in one of the two rings."""

    __slots__ = ("nvars", "field", "ring", "terms")

    def __init__(self, nvars, field, terms, ring=RING_T):
        if ring not in (RING_T, RING_S):
            raise ValueError(f"unknown ring tag {ring!r}")
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars or any(a < 0 for a in exps):
                raise ValueError(f"bad exponent vector {exps} for nvars={nvars}")
            if not field.is_zero(coeff):
                clean[exps] = coeff
        self.nvars = nvars
        self.field = field
        self.ring = ring
        self.terms = clean

    @classmethod
    def zero(cls, nvars, field, ring=RING_T):
        return cls(nvars, field, {}, ring)

    @classmethod
    def monomial(cls, nvars, field, exps, coeff=None, ring=RING_T):
        if coeff is None:
            coeff = field.one
        return cls(nvars, field, {tuple(exps): coeff}, ring)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    @property
    def degree(self):
        """Total degree of a homogeneous form; None for the zero form."""
        if not self.terms:
            return None
        degrees = {sum(e) for e in self.terms}
        if len(degrees) > 1:
            raise NonHomogeneousError(f"form has mixed degrees {sorted(degrees)}")
        return degrees.pop()

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        if self.nvars != other.nvars:
            raise ArityMismatchError(f"{self.nvars} vs {other.nvars} variables")
        if self.ring != other.ring:
            raise ApolarError(f"mixed rings {self.ring!r} and {other.ring!r}")

    def __add__(self, other):
        self._check_compatible(other)
        f = self.field
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = f.add(terms.get(exps, f.zero), coeff)
        return Form(self.nvars, f, terms, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return Form(
            self.nvars, f, {e: f.neg(c) for e, c in self.terms.items()}, self.ring
        )

    def scale(self, c):
        f = self.field
        return Form(
            self.nvars, f, {e: f.mul(c, v) for e, v in self.terms.items()}, self.ring
        )

    def __mul__(self, other):
        self._check_compatible(other)
        f = self.field
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                terms[key] = f.add(terms.get(key, f.zero), f.mul(ca, cb))
        return Form(self.nvars, f, terms, self.ring)

    def __eq__(self, other):
        return (
            isinstance(other, Form)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.field
        pieces = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            coeff = self.terms[exps]
            factors = []
            for i, a in enumerate(exps):
                if a == 1:
                    factors.append(f"{self.ring}{i}")
                elif a > 1:
                    factors.append(f"{self.ring}{i}^{a}")
            text = f.to_str(coeff)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if factors and text == "1":
                body = "*".join(factors)
            elif factors:
                body = text + "*" + "*".join(factors)
            else:
                body = text
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    __repr__ = __str__


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>[xy]\d+)|(?P<caret>\^)"
    r"|(?P<star>\*)|(?P<sign>[+-]))"
)


def parse_form(text: str, nvars: int, field, ring=RING_T):
    """Parse polynomial text into a canonical Form.

    Grammar: terms separated by `+`/`-`; a term is an optional
    integer-or-fraction coefficient and `*`-separated variable powers
    `x<i>^<k>` (`^<k>` optional when k = 1). Whitespace is insignificant.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()

    f = field
    terms = {}
    i = 0
    n = len(tokens)
    if n == 0:
        raise ParseError("empty polynomial", 0)
    first = True
    while i < n:
        sign = f.one
        saw_sign = False
        while i < n and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sign = f.neg(sign)
            saw_sign = True
            i += 1
        if i >= n:
            raise ParseError("dangling sign", tokens[-1][2])
        if not first and not saw_sign:
            raise ParseError("expected + or - between terms", tokens[i][2])
        first = False

        coeff = sign
        exps = [0] * nvars
        expect_factor = True
        saw_factor = False
        while i < n:
            kind, value, at = tokens[i]
            if kind == "sign":
                break
            if kind == "star":
                if expect_factor:
                    raise ParseError("unexpected '*'", at)
                expect_factor = True
                i += 1
                continue
            if not expect_factor:
                raise ParseError("missing '*' between factors", at)
            if kind == "num":
                if saw_factor:
                    raise ParseError("coefficient must come first in a term", at)
                coeff = f.mul(coeff, f.parse(value))
            elif kind == "var":
                letter, index = value[0], int(value[1:])
                if letter != ring:
                    raise ParseError(
                        f"variable {value!r} does not belong to ring {ring!r}", at
                    )
                if index >= nvars:
                    raise VariableOutOfRangeError(
                        f"variable {value!r} out of range for nvars={nvars}", at
                    )
                power = 1
                if i + 1 < n and tokens[i + 1][0] == "caret":
                    if i + 2 >= n or tokens[i + 2][0] != "num" or "/" in tokens[i + 2][1]:
                        raise ParseError("expected integer exponent after '^'", tokens[i + 1][2])
                    power = int(tokens[i + 2][1])
                    i += 2
                exps[index] += power
            else:
                raise ParseError(f"unexpected token {value!r}", at)
            saw_factor = True
            expect_factor = False
            i += 1
        if expect_factor and saw_factor:
            raise ParseError("dangling '*'", tokens[i - 1][2])
        if not saw_factor:
            raise ParseError("empty term", tokens[i - 1][2] if i else 0)
        key = tuple(exps)
        terms[key] = f.add(terms.get(key, f.zero), coeff)
    return Form(nvars, field, terms, ring)


def contract(g: Form, F: Form) -> Form:
    """Apply a dual form to a form: y^a acts on x^b giving x^(b-a) when
    a <= b componentwise and 0 otherwise, extended bilinearly."""
    if g.ring != RING_S or F.ring != RING_T:
        raise ApolarError("contract expects (dual form in y, form in x)")
    if g.field != F.field:
        raise FieldMismatchError(f"{g.field!r} vs {F.field!r}")
    if g.nvars != F.nvars:
        raise ArityMismatchError(f"{g.nvars} vs {F.nvars} variables")
    f = F.field
    terms = {}
    for a, ca in g.terms.items():
        for b, cb in F.terms.items():
            if all(ai <= bi for ai, bi in zip(a, b)):
                key = tuple(bi - ai for ai, bi in zip(a, b))
                terms[key] = f.add(terms.get(key, f.zero), f.mul(ca, cb))
    return Form(F.nvars, f, terms, RING_T)


class ProjectivePoint:
    """A point of projective space, normalized so the first nonzero
    coordinate is 1; equality and hashing use the normalized coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = list(coords)
        if not coords:
            raise ApolarError("a point needs at least one coordinate")
        lead = next((c for c in coords if not field.is_zero(c)), None)
        if lead is None:
            raise ApolarError("a projective point needs a nonzero coordinate")
        scale = field.inv(lead)
        self.field = field
        self.coords = tuple(field.mul(scale, c) for c in coords)

    @property
    def nvars(self) -> int:
        return len(self.coords)

    @classmethod
    def parse(cls, text: str, field):
        parts = text.split(":")
        if len(parts) < 2:
            raise ParseError(f"bad point {text!r}: expected `:`-separated coordinates")
        return cls(field, [field.parse(p) for p in parts])

    def format(self) -> str:
        return ":".join(self.field.to_str(c) for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, ProjectivePoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(self.field.to_str(c) for c in self.coords) + ")"


def linear_power(point: ProjectivePoint, e: int) -> Form:
    """(p0*x0 + ... + pn*xn)^e expanded by multinomial coefficients.

    Over GF(p) the multinomial coefficients are reduced mod p as-is; no
    error is raised when they vanish.
    """
    if e < 1:
        raise ValueError("exponent must be at least 1")
    f = point.field
    terms = {}
    for exps in monomial_basis(point.nvars, e):
        coeff = f.from_int(multinomial(e, exps))
        for c, a in zip(point.coords, exps):
            if a:
                coeff = f.mul(coeff, f.pow(c, a))
        if not f.is_zero(coeff):
            terms[exps] = coeff
    return Form(point.nvars, f, terms, RING_T)


def dual_power(point: ProjectivePoint, e: int) -> Form:
    """The degree-e contraction dual of a point: the form with coefficient
    p^a at x^a (no multinomial factors).

    For any dual form g of degree k <= e, contract(g, dual_power(p, e)) =
    g(p) * dual_power(p, e - k), so g annihilates it iff g vanishes at the
    point; valid in every characteristic. Over QQ (or GF(p) with p > e)
    its span over a point set equals the span of the honest e-th powers.
    """
    if e < 1:
        raise ValueError("exponent must be at least 1")
    f = point.field
    terms = {}
    for exps in monomial_basis(point.nvars, e):
        coeff = f.one
        for c, a in zip(point.coords, exps):
            if a:
                coeff = f.mul(coeff, f.pow(c, a))
        if not f.is_zero(coeff):
            terms[exps] = coeff
    return Form(point.nvars, f, terms, RING_T)


def coefficient_vector(F: Form, basis):
    """Coordinates of a homogeneous form in an ordered monomial basis."""
    if F.terms:
        degree = F.degree
        if degree != sum(basis[0]):
            raise DegreeMismatchError(
                f"form of degree {degree} vs basis of degree {sum(basis[0])}"
            )
        if set(F.terms) - set(basis):
            raise DegreeMismatchError("form has terms outside the basis")
    f = F.field
    return [F.terms.get(exps, f.zero) for exps in basis]
