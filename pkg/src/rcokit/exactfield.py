"""Exact arithmetic in the quadratic fields Q, Q(sqrt 2) and Q(sqrt 5).

A :class:`QuadRat` holds ``a + b*sqrt(d)`` with rational ``a`` and ``b``.
Internally the value is stored over a common denominator as
``(p + q*sqrt(d)) / n`` with ``gcd(p, q, n) == 1`` and ``n > 0``; the
rational components ``a`` and ``b`` are exposed through properties.
Normalization happens after every operation, so structural equality is
value equality.

Values from different fields never mix.  Plain ``int`` and ``Fraction``
operands are coerced into the field of the other operand, and a rational
``QuadRat`` (``d == 1``) can be moved into a larger field explicitly with
:meth:`QuadRat.lift`.
"""

from __future__ import annotations

import decimal
from collections import namedtuple
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

__all__ = [
    "RADICANDS",
    "FieldError",
    "FieldMixError",
    "QuadRat",
    "Point3",
    "Isometry",
    "qr",
    "qr_arith",
    "qr_sign",
    "point",
    "vadd",
    "vsub",
    "vscale",
    "vdot",
    "vcross",
    "vneg",
    "orient3d",
    "common_radicand",
    "lift_point",
]

RADICANDS = (1, 2, 5)


class FieldError(ArithmeticError):
    """Raised for operations that leave the supported fields."""


class FieldMixError(FieldError):
    """Raised when operands live in different quadratic fields."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational component")


class QuadRat:
    """The number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and d in {1, 2, 5}."""

    __slots__ = ("_p", "_q", "_n", "_d", "_hash")

    def __init__(self, a=0, b=0, d: int = 1):
        if d not in RADICANDS:
            raise FieldError(f"unsupported radicand {d}")
        fa = _as_fraction(a)
        fb = _as_fraction(b)
        n = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
        p = fa.numerator * (n // fa.denominator)
        q = fb.numerator * (n // fb.denominator)
        self._set(p, q, n, d)

    def _set(self, p: int, q: int, n: int, d: int) -> None:
        if d == 1:
            p, q = p + q, 0
        g = gcd(p, q, n)
        if g != 1:
            p //= g
            q //= g
            n //= g
        self._p, self._q, self._n, self._d = p, q, n, d
        self._hash = None

    @classmethod
    def _raw(cls, p: int, q: int, n: int, d: int) -> "QuadRat":
        obj = cls.__new__(cls)
        if n < 0:
            p, q, n = -p, -q, -n
        obj._set(p, q, n, d)
        return obj

    # components -------------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def a(self) -> Fraction:
        return Fraction(self._p, self._n)

    @property
    def b(self) -> Fraction:
        return Fraction(self._q, self._n)

    @property
    def a_num(self) -> int:
        return self.a.numerator

    @property
    def a_den(self) -> int:
        return self.a.denominator

    @property
    def b_num(self) -> int:
        return self.b.numerator

    @property
    def b_den(self) -> int:
        return self.b.denominator

    def is_rational(self) -> bool:
        return self._q == 0

    def lift(self, d: int) -> "QuadRat":
        """Return this value in the field Q(sqrt d); only rationals can move."""
        if d == self._d:
            return self
        if d not in RADICANDS:
            raise FieldError(f"unsupported radicand {d}")
        if self._q != 0:
            raise FieldMixError(f"cannot move {self!r} from Q(sqrt {self._d}) to Q(sqrt {d})")
        return QuadRat._raw(self._p, 0, self._n, d)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "QuadRat":
        if isinstance(other, QuadRat):
            if other._d != self._d:
                raise FieldMixError(
                    f"field mix: Q(sqrt {self._d}) and Q(sqrt {other._d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return QuadRat._raw(f.numerator, 0, f.denominator, self._d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = self._n * o._n
        return QuadRat._raw(self._p * o._n + o._p * self._n, self._q * o._n + o._q * self._n, n, self._d)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat._raw(-self._p, -self._q, self._n, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._d
        p = self._p * o._p + d * self._q * o._q
        q = self._p * o._q + self._q * o._p
        return QuadRat._raw(p, q, self._n * o._n, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRat":
        return QuadRat._raw(self._p, -self._q, self._n, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - d*b**2``."""
        return Fraction(self._p * self._p - self._d * self._q * self._q, self._n * self._n)

    def inverse(self) -> "QuadRat":
        den = self._p * self._p - self._d * self._q * self._q
        if den == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadRat._raw(self._p * self._n, -self._q * self._n, den, self._d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadRat._raw(1, 0, 1, self._d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # order ------------------------------------------------------------

    def sign(self) -> int:
        p, q = self._p, self._q
        if p >= 0 and q >= 0:
            return 1 if (p or q) else 0
        if p <= 0 and q <= 0:
            return -1
        diff = p * p - self._d * q * q
        s = (diff > 0) - (diff < 0)
        return s if p > 0 else -s

    def __bool__(self):
        return self._p != 0 or self._q != 0

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return (self._p, self._q, self._n, self._d) == (other._p, other._q, other._n, other._d)
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and Fraction(self._p, self._n) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self._q == 0:
                # agree with int/Fraction hashing for rationals
                self._hash = hash(Fraction(self._p, self._n))
            else:
                self._hash = hash((self._p, self._q, self._n, self._d))
        return self._hash

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadRat with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # square roots -----------------------------------------------------

    def sqrt(self) -> "QuadRat":
        """Exact square root, if it exists in one of the supported fields.

        A rational argument may produce a result in Q(sqrt 2) or Q(sqrt 5);
        an irrational argument keeps its own field.
        """
        if self.sign() < 0:
            raise FieldError(f"square root of negative value {self}")
        if not self:
            return self
        a, b = self.a, self.b
        if b == 0:
            fields = (self._d,) if self._d != 1 else RADICANDS
            for d in fields:
                r = _rational_sqrt(a)
                if r is not None:
                    return QuadRat(r, 0, d)
                if d != 1:
                    r = _rational_sqrt(a / d)
                    if r is not None:
                        return QuadRat(0, r, d)
            raise FieldError(f"sqrt({self}) is not in Q(sqrt 2) or Q(sqrt 5)")
        # (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 = (a +- sqrt(a^2 - d b^2)) / 2
        disc = _rational_sqrt(a * a - self._d * b * b)
        if disc is not None:
            for x2 in ((a + disc) / 2, (a - disc) / 2):
                x = _rational_sqrt(x2) if x2 > 0 else None
                if x:
                    cand = QuadRat(x, b / (2 * x), self._d)
                    if cand.sign() > 0 and cand * cand == self:
                        return cand
        raise FieldError(f"sqrt({self}) is not in Q(sqrt {self._d})")

    # conversion -------------------------------------------------------

    def to_decimal(self, prec: int = 60) -> decimal.Decimal:
        ctx = decimal.Context(prec=prec + 10)
        val = ctx.add(
            decimal.Decimal(self._p),
            ctx.multiply(decimal.Decimal(self._q), ctx.sqrt(decimal.Decimal(self._d))),
        )
        return decimal.Context(prec=prec).divide(val, decimal.Decimal(self._n))

    def __float__(self) -> float:
        if self._q == 0:
            return self._p / self._n
        return float(self.to_decimal(60))

    def __repr__(self):
        return f"QuadRat({self.a!s}, {self.b!s}, d={self._d})"

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        root = f"√{self._d}" if b in (1, -1) else f"{abs(b)}√{self._d}"
        if a == 0:
            return ("-" if b < 0 else "") + root
        return f"{a}{'-' if b < 0 else '+'}{root}"

    def __reduce__(self):
        return (QuadRat, (self.a, self.b, self._d))


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    n, m = x.numerator, x.denominator
    rn, rm = isqrt(n), isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def qr(a=0, b=0, d: int = 1) -> QuadRat:
    """Shorthand constructor."""
    return QuadRat(a, b, d)


def qr_arith(x: QuadRat, y: QuadRat, op: str) -> QuadRat:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two field elements."""
    if x.d != y.d:
        raise FieldMixError(f"field mix: Q(sqrt {x.d}) and Q(sqrt {y.d})")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qr_sign(x: QuadRat) -> int:
    return x.sign()


# ---------------------------------------------------------------------------
# points and vectors


class Point3(namedtuple("_Point3", "x y z")):
    """Exact 3-vector; components share one radicand."""

    __slots__ = ()

    def __new__(cls, x, y, z, d: int | None = None):
        comps = [x, y, z]
        if d is None:
            ds = {c.d for c in comps if isinstance(c, QuadRat)}
            if len(ds) > 1:
                ds.discard(1)
                if len(ds) > 1:
                    raise FieldMixError(f"point components from fields {sorted(ds)}")
            d = ds.pop() if ds else 1
        out = []
        for c in comps:
            if not isinstance(c, QuadRat):
                c = QuadRat(c, 0, d)
            elif c.d != d:
                c = c.lift(d)
            out.append(c)
        return super().__new__(cls, *out)

    @property
    def d(self) -> int:
        return self.x.d

    def __add__(self, other):
        return vadd(self, other)

    def __sub__(self, other):
        return vsub(self, other)

    def __neg__(self):
        return vneg(self)

    def __mul__(self, k):
        return vscale(self, k)

    __rmul__ = __mul__

    def to_floats(self) -> tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))

    def __repr__(self):
        return f"Point3({self.x}, {self.y}, {self.z})"


def point(x, y, z, d: int | None = None) -> Point3:
    return Point3(x, y, z, d)


def lift_point(p: Point3, d: int) -> Point3:
    if p.d == d:
        return p
    return Point3(p.x.lift(d), p.y.lift(d), p.z.lift(d), d)


def common_radicand(*ds: int) -> int:
    """Smallest field containing all the given ones (rationals embed anywhere)."""
    nontrivial = {d for d in ds if d != 1}
    if len(nontrivial) > 1:
        raise FieldMixError(f"no common field for radicands {sorted(nontrivial)}")
    return nontrivial.pop() if nontrivial else 1


def vadd(u: Point3, v: Point3) -> Point3:
    return tuple.__new__(Point3, (u[0] + v[0], u[1] + v[1], u[2] + v[2]))


def vsub(u: Point3, v: Point3) -> Point3:
    return tuple.__new__(Point3, (u[0] - v[0], u[1] - v[1], u[2] - v[2]))


def vneg(u: Point3) -> Point3:
    return tuple.__new__(Point3, (-u[0], -u[1], -u[2]))


def vscale(u: Point3, k) -> Point3:
    return tuple.__new__(Point3, (u[0] * k, u[1] * k, u[2] * k))


def vdot(u: Point3, v: Point3) -> QuadRat:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def vcross(u: Point3, v: Point3) -> Point3:
    return tuple.__new__(
        Point3,
        (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ),
    )


def orient3d(p: Point3, q: Point3, r: Point3, s: Point3) -> int:
    """Sign of det[q-p, r-p, s-p]; zero iff the four points are coplanar."""
    d = p.d
    if q.d != d or r.d != d or s.d != d:
        raise FieldMixError("orient3d on points from different fields")
    return vdot(vcross(vsub(q, p), vsub(r, p)), vsub(s, p)).sign()


# ---------------------------------------------------------------------------
# isometries


class Isometry:
    """A 3x3 matrix over one quadratic field, applied to column vectors.

    Construction does not insist on orthogonality so the same class can carry
    intermediate similarity matrices; :meth:`is_orthogonal` checks exactly.
    """

    __slots__ = ("m",)

    def __init__(self, rows):
        self.m = tuple(tuple(row) for row in rows)
        if len(self.m) != 3 or any(len(r) != 3 for r in self.m):
            raise ValueError("isometry needs a 3x3 matrix")

    @classmethod
    def identity(cls, d: int = 1) -> "Isometry":
        one, zero = QuadRat(1, 0, d), QuadRat(0, 0, d)
        return cls([[one if i == j else zero for j in range(3)] for i in range(3)])

    @property
    def d(self) -> int:
        return self.m[0][0].d

    def apply(self, v: Point3) -> Point3:
        m = self.m
        return tuple.__new__(
            Point3,
            (
                m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
                m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
                m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
            ),
        )

    __call__ = apply

    def __matmul__(self, other: "Isometry") -> "Isometry":
        a, b = self.m, other.m
        return Isometry(
            [[a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3)] for i in range(3)]
        )

    def transpose(self) -> "Isometry":
        return Isometry([[self.m[j][i] for j in range(3)] for i in range(3)])

    def det(self) -> QuadRat:
        m = self.m
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def is_orthogonal(self) -> bool:
        return self.transpose() @ self == Isometry.identity(self.d)

    def inverse(self) -> "Isometry":
        """Exact inverse via the adjugate."""
        m = self.m
        det = self.det()
        if not det:
            raise ZeroDivisionError("singular matrix")
        cof = [
            [
                m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
        inv_det = det.inverse()
        return Isometry([[c * inv_det for c in row] for row in cof])

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def key(self) -> tuple:
        """Total order key used for canonical sorting of group elements."""
        return tuple((c.a, c.b) for row in self.m for c in row)

    def __repr__(self):
        rows = "; ".join(" ".join(str(c) for c in row) for row in self.m)
        return f"Isometry([{rows}])"
