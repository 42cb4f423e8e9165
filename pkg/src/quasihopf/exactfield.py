"""Exact scalar arithmetic over Q, the Gaussian rationals Q(i), and prime fields F_p.

Everything downstream manipulates `Scalar` values tied to a `Field`
descriptor.  All arithmetic is exact (arbitrary-precision), so algebraic
identities are decided by plain equality, never by tolerance.

Rational payloads use gmpy2.mpq when available (an order of magnitude faster
on the bulk tensor products) and fall back to fractions.Fraction.
"""

from __future__ import annotations

import math
import re as _re

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _RAT

RATIONALS = "rationals"
GAUSSIAN = "gaussian"
PRIME = "fp"


class FieldError(ValueError):
    """Malformed field description or operands from different fields."""


class DivisionByZero(ZeroDivisionError):
    """Division or inversion by zero."""


class ScalarParseError(ValueError):
    """Unreadable scalar literal."""


def _rat(x=0, y=None):
    if y is not None:
        return _RAT(x, y)
    if isinstance(x, str):
        x = x.strip().lstrip("+")
    return _RAT(x)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _rat_sqrt(q):
    """Exact square root of a non-negative rational, or None."""
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return _rat(rn, rd)


class Field:
    """A computable coefficient field: Q, Q(i), or F_p (p prime, as residues)."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind not in (RATIONALS, GAUSSIAN, PRIME):
            raise FieldError(f"unknown field kind {kind!r}")
        if kind == PRIME:
            if p is None or not _is_prime(p):
                raise FieldError(f"modulus {p!r} is not prime")
        elif p is not None:
            raise FieldError("only prime fields take a modulus")
        self.kind = kind
        self.p = p

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"Field({self.header()!r})"

    def header(self) -> str:
        """Header text used by the structure-constant file format."""
        if self.kind == PRIME:
            return f"fp {self.p}"
        return self.kind

    @classmethod
    def from_header(cls, text: str) -> "Field":
        toks = text.split()
        if toks and toks[0] == RATIONALS and len(toks) == 1:
            return cls(RATIONALS)
        if toks and toks[0] == GAUSSIAN and len(toks) == 1:
            return cls(GAUSSIAN)
        if len(toks) == 2 and toks[0] == PRIME and toks[1].isdigit():
            return cls(PRIME, int(toks[1]))
        raise FieldError(f"bad field header {text!r}")

    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    # -- scalar construction ------------------------------------------------

    def zero(self) -> "Scalar":
        if self.kind == PRIME:
            return Scalar(self, 0, 0)
        return Scalar(self, _rat(0), _rat(0))

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        if self.kind == PRIME:
            return Scalar(self, n % self.p, 0)
        return Scalar(self, _rat(n), _rat(0))

    def scalar(self, re, im=0) -> "Scalar":
        """Build a scalar from integer/rational parts (imaginary only in Q(i))."""
        if self.kind == PRIME:
            if im:
                raise FieldError("prime-field scalars have no imaginary part")
            q = _rat(re)
            num, den = int(q.numerator), int(q.denominator)
            return self.from_int(num) / self.from_int(den)
        re = _rat(re)
        im = _rat(im)
        if im and self.kind == RATIONALS:
            raise FieldError("the rationals contain no imaginary part")
        return Scalar(self, re, im)

    def i(self):
        """A fixed square root of -1, or None if the field has none."""
        if self.kind == GAUSSIAN:
            return Scalar(self, _rat(0), _rat(1))
        if self.kind == PRIME:
            p = self.p
            if p == 2 or p % 4 != 1:
                return None
            for w in range(2, p):
                if (w * w) % p == p - 1:
                    return Scalar(self, w, 0)
        return None

    def sqrt(self, s: "Scalar"):
        """An exact square root of `s` inside the field, or None."""
        self._own(s)
        if self.kind == PRIME:
            for r in range(self.p):
                if (r * r) % self.p == s.re:
                    return Scalar(self, r, 0)
            return None
        a, b = s.re, s.im
        if b == 0:
            r = _rat_sqrt(a)
            if r is not None:
                return Scalar(self, r, _rat(0))
            if self.kind == GAUSSIAN:
                r = _rat_sqrt(-a)
                if r is not None:
                    return Scalar(self, _rat(0), r)
            return None
        # a + bi with b != 0: need rational n = sqrt(a^2+b^2), then re^2 = (a+n)/2
        n = _rat_sqrt(a * a + b * b)
        if n is None:
            return None
        re = _rat_sqrt((a + n) / 2)
        if re is None or re == 0:
            return None
        im = b / (2 * re)
        return Scalar(self, re, im)

    def roots_of_unity(self, m: int) -> list["Scalar"]:
        """All solutions of z^m = 1; exact, deterministic order."""
        one = self.one()
        if self.kind == PRIME:
            return [z for z in (self.from_int(r) for r in range(1, self.p))
                    if z ** m == one]
        cands = [one, -one]
        ii = self.i()
        if ii is not None:
            cands += [ii, -ii]
        return [z for z in cands if z ** m == one]

    # -- text syntax ---------------------------------------------------------

    def parse(self, text: str) -> "Scalar":
        """Parse `a/b`, `n`, or `a/b+c/d*i` style literals (parts optional)."""
        t = text.strip().replace(" ", "")
        if not t:
            raise ScalarParseError("empty scalar literal")
        if self.kind == PRIME:
            if not _re.fullmatch(r"-?\d+", t):
                raise ScalarParseError(f"bad residue {text!r}")
            return self.from_int(int(t))
        m = _re.fullmatch(
            r"(?P<re>[+-]?\d+(?:/\d+)?)?"
            r"(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)\*?i)?",
            t,
        )
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ScalarParseError(f"bad scalar {text!r}")
        re_part = _rat(m.group("re")) if m.group("re") is not None else _rat(0)
        im_part = _rat(0)
        if m.group("im") is not None:
            raw = m.group("im")
            if raw in ("", "+"):
                im_part = _rat(1)
            elif raw == "-":
                im_part = _rat(-1)
            else:
                im_part = _rat(raw)
        if im_part and self.kind == RATIONALS:
            raise ScalarParseError(f"imaginary literal {text!r} in the rationals")
        return Scalar(self, re_part, im_part)

    def format(self, s: "Scalar") -> str:
        self._own(s)
        if self.kind == PRIME:
            return str(s.re)

        def frac(q) -> str:
            return str(q)

        a, b = s.re, s.im
        if b == 0:
            return frac(a)
        if b == 1:
            imtxt = "i"
        elif b == -1:
            imtxt = "-i"
        else:
            imtxt = f"{frac(b)}*i"
        if a == 0:
            return imtxt
        sep = "+" if b > 0 else ""
        return f"{frac(a)}{sep}{imtxt}"

    def _own(self, s: "Scalar"):
        if not isinstance(s, Scalar) or s.field != self:
            raise FieldError("scalar belongs to a different field")


class Scalar:
    """Immutable exact field element.

    For Q and Q(i) the payload is a pair of rationals (re, im); for F_p it
    is a residue in [0, p).  Rationals keep im == 0 throughout.
    """

    __slots__ = ("field", "re", "im")

    def __init__(self, field: Field, re, im):
        self.field = field
        self.re = re
        self.im = im

    # -- predicates ----------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_one(self) -> bool:
        if self.field.kind == PRIME:
            return self.re == 1
        return self.re == 1 and not self.im

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self.field.p, self.re, self.im))

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError("mixed-field arithmetic")
            return other
        return None

    def __add__(self, other):
        f = self.field
        if isinstance(other, Scalar) and other.field is f:
            if f.kind == PRIME:
                return Scalar(f, (self.re + other.re) % f.p, 0)
            return Scalar(f, self.re + other.re, self.im + other.im)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if f.kind == PRIME:
            return Scalar(f, (self.re + o.re) % f.p, 0)
        return Scalar(f, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.kind == PRIME:
            return Scalar(f, (-self.re) % f.p, 0)
        return Scalar(f, -self.re, -self.im)

    def __sub__(self, other):
        f = self.field
        if isinstance(other, Scalar) and other.field is f:
            if f.kind == PRIME:
                return Scalar(f, (self.re - other.re) % f.p, 0)
            return Scalar(f, self.re - other.re, self.im - other.im)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        f = self.field
        if isinstance(other, Scalar) and other.field is f:
            if f.kind == PRIME:
                return Scalar(f, (self.re * other.re) % f.p, 0)
            return Scalar(
                f,
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if f.kind == PRIME:
            return Scalar(f, (self.re * o.re) % f.p, 0)
        return Scalar(
            f,
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        f = self.field
        if not self:
            raise DivisionByZero("inverse of zero")
        if f.kind == PRIME:
            return Scalar(f, pow(self.re, f.p - 2, f.p), 0)
        n = self.re * self.re + self.im * self.im
        return Scalar(f, self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Scalar":
        if self.field.kind == PRIME:
            return self
        return Scalar(self.field, self.re, -self.im)

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"Scalar({self.field.header()}: {self.field.format(self)})"


# -- module-level conveniences ------------------------------------------------


def rationals() -> Field:
    return Field(RATIONALS)


def gaussian() -> Field:
    return Field(GAUSSIAN)


def prime_field(p: int) -> Field:
    return Field(PRIME, p)


def fourth_root_of_unity(field: Field):
    """A primitive fourth root of unity in `field`, or None if absent."""
    return field.i()


def characteristic(field: Field) -> int:
    return field.characteristic()
