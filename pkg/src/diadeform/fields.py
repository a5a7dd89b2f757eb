"""Exact base fields: the rationals and prime fields GF(p).

Rational scalars are ``gmpy2.mpq`` when gmpy2 is installed (much faster)
and plain ``fractions.Fraction`` otherwise; the two types interoperate and
compare equal, so either works everywhere.  GF(p) scalars are
``GFElement``.  All scalar types support ``+ - * /``, compare equal to
``0``/``1`` where appropriate, and are hashable, so all linear algebra
code is written field-agnostically.
"""

from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

from .errors import BadScalar, MixedFields

_RATIONAL_TYPES = (Fraction,) if _mpq is Fraction else (Fraction, type(_mpq(0)))


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GFElement:
    """Canonical representative in [0, p-1] of a residue mod p."""

    p: int
    v: int

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise MixedFields("GF(%d) vs GF(%d)" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return GFElement(self.p, other % self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(self.p, (self.v + other.v) % self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(self.p, (self.v - other.v) % self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElement(self.p, (self.v * other.v) % self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return self * GFElement(self.p, pow(other.v, self.p - 2, self.p))

    def __neg__(self):
        return GFElement(self.p, (-self.v) % self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


class Rationals:
    """Field descriptor for exact rationals."""

    name = "rationals"

    @property
    def zero(self):
        return _mpq(0)

    @property
    def one(self):
        return _mpq(1)

    def from_int(self, n):
        return _mpq(n)

    def parse(self, text):
        try:
            return _mpq(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadScalar("bad rational %r: %s" % (text, exc))

    def format(self, x):
        return str(x)

    def owns(self, x):
        # plain ints are coerced to field scalars at matrix construction
        return isinstance(x, _RATIONAL_TYPES)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """Field descriptor for GF(p), p prime."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("GF order must be prime, got %d" % p)
        self.p = p
        self.name = "gf %d" % p

    @property
    def zero(self):
        return GFElement(self.p, 0)

    @property
    def one(self):
        return GFElement(self.p, 1)

    def from_int(self, n):
        return GFElement(self.p, n % self.p)

    def parse(self, text):
        # accept "a" or "a/b" with b invertible mod p
        try:
            q = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadScalar("bad scalar %r: %s" % (text, exc))
        if q.denominator % self.p == 0:
            raise BadScalar("denominator of %r is 0 in GF(%d)" % (text, self.p))
        return self.from_int(q.numerator) / self.from_int(q.denominator)

    def format(self, x):
        return str(x.v)

    def owns(self, x):
        return isinstance(x, GFElement) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = Rationals()


def parse_field(text):
    """Parse a field descriptor: "rationals" or "gf <p>" / "gf:<p>"."""
    words = text.replace(":", " ").split()
    if words == ["rationals"]:
        return QQ
    if len(words) == 2 and words[0] == "gf":
        try:
            p = int(words[1])
        except ValueError:
            raise BadScalar("bad prime %r" % words[1])
        return PrimeField(p)
    raise BadScalar("unknown field %r" % text)
