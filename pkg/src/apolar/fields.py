"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` values (always in lowest terms
with positive denominator); prime-field scalars are plain ints in [0, p).
All operations are pure and every value is immutable, so fields and
scalars may be shared freely between threads.
"""

from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    NoRootOfUnityError,
    NotPrimeError,
    ParseError,
)


def is_prime(n: int) -> bool:
    """Deterministic primality test; trial division is fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of the two supported coefficient fields."""

    characteristic: int

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        acc = self.one
        base = a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        """Parse an exact scalar: an integer or a fraction `a/b`."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return self.div(self.from_int(int(num)), self.from_int(int(den)))
            return self.from_int(int(text))
        except ValueError as ex:
            raise ParseError(f"bad scalar {text!r}") from ex

    def to_str(self, a) -> str:
        return str(a)

    def reduce_row(self, row):
        """Hook for per-row normalization during elimination; default no-op."""
        return row

    def spec_string(self) -> str:
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers with arbitrary-precision arithmetic."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("inverse of 0 in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZeroError("division by 0 in QQ")
        return a / b

    def is_zero(self, a) -> bool:
        return not a

    def from_int(self, n: int):
        return Fraction(n)

    def reduce_row(self, row):
        # Divide out the row content (gcd of numerators over lcm of
        # denominators) to keep intermediate fraction sizes bounded.
        from math import gcd, lcm

        g = 0
        l = 1
        for x in row:
            if x:
                g = gcd(g, x.numerator)
                l = lcm(l, x.denominator)
        if g in (0, 1) and l == 1:
            return row
        factor = Fraction(l, g)
        return [x * factor for x in row]

    def spec_string(self) -> str:
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """GF(p) with residues in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZeroError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, n: int):
        return n % self.p

    def spec_string(self) -> str:
        return f"Fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def field_create(spec: str) -> Field:
    """Build a field from its spec string: `QQ` or `Fp:<prime>`."""
    spec = spec.strip()
    if spec == "QQ":
        return QQ
    if spec.startswith("Fp:"):
        body = spec[3:]
        if not body.isdigit():
            raise ParseError(f"bad field spec {spec!r}: expected Fp:<prime>")
        return PrimeField(int(body))
    raise ParseError(f"bad field spec {spec!r}: expected QQ or Fp:<prime>")


def primitive_root_of_unity(field: Field, m: int):
    """A scalar of exact multiplicative order m, if the field has one.

    In GF(p) the search iterates g = 2, 3, ... and tests g^((p-1)/m),
    which is deterministic and fast for desk-scale p.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return field.one
    if isinstance(field, Rationals):
        if m == 2:
            return Fraction(-1)
        raise NoRootOfUnityError(f"QQ has no primitive {m}-th root of unity")
    p = field.p
    if (p - 1) % m != 0:
        raise NoRootOfUnityError(
            f"GF({p}) has no primitive {m}-th root of unity ({m} does not divide {p - 1})"
        )
    exponent = (p - 1) // m
    for g in range(2, p):
        z = pow(g, exponent, p)
        if _has_order(z, m, p):
            return z
    raise NoRootOfUnityError(f"no primitive {m}-th root of unity found in GF({p})")


def _has_order(z: int, m: int, p: int) -> bool:
    acc = z
    for _ in range(m - 1):
        if acc == 1:
            return False
        acc = acc * z % p
    return acc == 1
