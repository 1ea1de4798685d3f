"""Exact scalar arithmetic: rationals, cyclotomic numbers, prime residues.

Every scalar in the toolkit is one of three immutable types:

* ``Rat`` -- arbitrary-precision rational (gmpy2.mpq when available,
  ``fractions.Fraction`` otherwise);
* ``Cyc`` -- element of Q(zeta_n) on the power basis 1, z, ..., z^(phi(n)-1);
* ``PrimeFieldElement`` -- residue modulo a prime (or prime power, for the
  lifting rings Z/p^m).

Fields are represented by small descriptor objects (``RationalField``,
``CyclotomicField``, ``PrimeField``) that hand out zero/one, coerce values
and parse/format the string serialization used by the JSON schemas.
"""

from __future__ import annotations

import math
import re

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is normally available
    from fractions import Fraction as Rat

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


def rat(x) -> Rat:
    """Coerce an int, string or rational into a Rat."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, int):
        return Rat(x)
    if isinstance(x, str):
        return Rat(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


def rat_str(x) -> str:
    n, d = x.numerator, x.denominator
    return str(int(n)) if d == 1 else f"{int(n)}/{int(d)}"


def is_integer_rat(x) -> bool:
    return x.denominator == 1


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists)
# ---------------------------------------------------------------------------

def _zpoly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _zpoly_div_exact(num, den):
    """Exact division of integer polynomials; den monic up to sign handling."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return q


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n: int):
    """Coefficients of Phi_n, ascending, computed by exact division of
    x^n - 1 by the Phi_d for proper divisors d of n."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _zpoly_div_exact(poly, cyclotomic_polynomial(d))
    _CYCLO_CACHE[n] = poly
    return poly


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# ---------------------------------------------------------------------------
# rational polynomial helpers for cyclotomic inversion
# ---------------------------------------------------------------------------

def _qpoly_trim(p):
    while p and p[-1] == RAT_ZERO:
        p.pop()
    return p


def _qpoly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [RAT_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = RAT_ONE / b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return _qpoly_trim(q), _qpoly_trim(a[: len(b) - 1])


def _qpoly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g over Q (lists ascending)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [RAT_ONE], []
    t0, t1 = [], [RAT_ONE]

    def sub_scaled(p, q, quo):
        # p - quo*q
        prod = [RAT_ZERO] * (len(quo) + len(q) - 1) if quo and q else []
        for i, qi in enumerate(quo):
            if qi:
                for j, cj in enumerate(q):
                    prod[i + j] += qi * cj
        out = list(p) + [RAT_ZERO] * max(0, len(prod) - len(p))
        for i, ci in enumerate(prod):
            out[i] -= ci
        return _qpoly_trim(out)

    while r1:
        quo, rem = _qpoly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub_scaled(s0, s1, quo)
        t0, t1 = t1, sub_scaled(t0, t1, quo)
    return r0, s0, t0


# ---------------------------------------------------------------------------
# cyclotomic numbers
# ---------------------------------------------------------------------------


class ConductorMismatch(ValueError):
    pass


class Cyc:
    """Exact element of Q(zeta_n) on the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- helpers ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field.conductor != self.field.conductor:
                raise ConductorMismatch(
                    f"conductor {other.field.conductor} != {self.field.conductor}")
            return other
        if isinstance(other, (int, Rat)):
            return self.field.from_rat(rat(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyc(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        phi = self.field.phi
        prod = [RAT_ZERO] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyc(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero cyclotomic number")
        phi_poly = [rat(c) for c in cyclotomic_polynomial(self.field.conductor)]
        g, s, _ = _qpoly_xgcd(_qpoly_trim(list(self.coeffs)), phi_poly)
        # g is a nonzero constant since Phi_n is irreducible over Q
        ginv = RAT_ONE / g[0]
        coeffs = [c * ginv for c in s]
        coeffs += [RAT_ZERO] * (2 * self.field.phi - 1 - len(coeffs))
        return Cyc(self.field, self.field._reduce(coeffs))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def sort_key(self):
        return tuple(self.coeffs)

    def __repr__(self):
        return self.field.format(self)


class CyclotomicField:
    """Q(zeta_n), conductor fixed, dense power-basis representation."""

    _instances = {}

    def __new__(cls, conductor: int):
        if conductor in cls._instances:
            return cls._instances[conductor]
        self = super().__new__(cls)
        cls._instances[conductor] = self
        self.conductor = conductor
        phi_poly = cyclotomic_polynomial(conductor)
        self.phi = len(phi_poly) - 1
        self.phi_int_coeffs = phi_poly
        # reduction table: x^(phi+j) on the power basis, integer entries
        table = []
        cur = [-c for c in phi_poly[:-1]]  # x^phi
        table.append(list(cur))
        for _ in range(self.phi - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(self.phi):
                    nxt[i] += top * table[0][i]
            nxt = nxt[: self.phi]
            table.append(list(nxt))
            cur = nxt
        self._red_table = table
        self.zero = Cyc(self, [RAT_ZERO] * self.phi)
        self.one = Cyc(self, [RAT_ONE] + [RAT_ZERO] * (self.phi - 1))
        return self

    def _reduce(self, prod):
        phi = self.phi
        out = [c for c in prod[:phi]] + [RAT_ZERO] * max(0, phi - len(prod))
        for j in range(len(prod) - 1, phi - 1, -1):
            c = prod[j]
            if c:
                for i, t in enumerate(self._red_table[j - phi]):
                    if t:
                        out[i] += c * t
        return out[:phi]

    def element(self, coeffs):
        coeffs = [rat(c) for c in coeffs]
        if len(coeffs) != self.phi:
            raise ValueError(f"expected {self.phi} coefficients")
        return Cyc(self, coeffs)

    def from_rat(self, x):
        return Cyc(self, [rat(x)] + [RAT_ZERO] * (self.phi - 1))

    from_int = from_rat

    def zeta(self, power: int = 1):
        power %= self.conductor
        if power < self.phi:
            mono = [RAT_ZERO] * self.phi
            mono[power] = RAT_ONE
            return Cyc(self, mono)
        gen = Cyc(self, self._reduce([RAT_ZERO, RAT_ONE]))
        return gen ** power

    # -- generic field surface -------------------------------------------
    def coerce(self, x):
        if isinstance(x, Cyc):
            if x.field.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {x.field.conductor} != {self.conductor}")
            return x
        return self.from_rat(rat(x))

    def to_qvec(self, x):
        return list(self.coerce(x).coeffs)

    def from_qvec(self, v):
        return self.element(v)

    def is_rational(self, x) -> bool:
        return all(c == 0 for c in x.coeffs[1:])

    def as_rat(self, x):
        if not self.is_rational(x):
            raise ValueError(f"{self.format(x)} is not rational")
        return x.coeffs[0]

    def sort_key(self, x):
        return tuple(x.coeffs)

    _TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*z(?:\^(\d+))?)?$")

    def format(self, x) -> str:
        terms = []
        for k, c in enumerate(x.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(rat_str(c))
            elif k == 1:
                terms.append(f"{rat_str(c)}*z")
            else:
                terms.append(f"{rat_str(c)}*z^{k}")
        return " + ".join(terms) if terms else "0"

    def parse(self, s: str):
        s = s.strip()
        if s == "0":
            return self.zero
        coeffs = [RAT_ZERO] * self.phi
        for term in s.split(" + "):
            m = self._TERM_RE.match(term.strip())
            if not m:
                raise ValueError(f"bad cyclotomic scalar {s!r}")
            c = rat(m.group(1))
            k = 0
            if term.find("*z") >= 0:
                k = int(m.group(2)) if m.group(2) else 1
            if k >= self.phi:
                raise ValueError(f"power z^{k} outside power basis in {s!r}")
            coeffs[k] += c
        return Cyc(self, coeffs)

    def describe(self):
        return {"type": "cyclotomic", "conductor": self.conductor}

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"


class RationalField:
    """The field Q; elements are plain Rat values."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            self = super().__new__(cls)
            self.conductor = 1
            self.phi = 1
            self.zero = RAT_ZERO
            self.one = RAT_ONE
            cls._instance = self
        return cls._instance

    def from_rat(self, x):
        return rat(x)

    from_int = from_rat
    coerce = from_rat

    def element(self, coeffs):
        (c,) = coeffs
        return rat(c)

    def to_qvec(self, x):
        return [rat(x)]

    def from_qvec(self, v):
        return rat(v[0])

    def is_rational(self, x) -> bool:
        return True

    def as_rat(self, x):
        return rat(x)

    def sort_key(self, x):
        return (rat(x),)

    def format(self, x) -> str:
        return rat_str(x)

    def parse(self, s: str):
        return rat(s.strip())

    def describe(self):
        return {"type": "rational"}

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


def field_from_descriptor(desc) -> "RationalField | CyclotomicField":
    if desc.get("type") == "rational":
        return QQ
    if desc.get("type") == "cyclotomic":
        return CyclotomicField(int(desc["conductor"]))
    raise ValueError(f"unknown field descriptor {desc!r}")


# ---------------------------------------------------------------------------
# prime fields and residue rings
# ---------------------------------------------------------------------------


class PrimeFieldElement:
    """Residue modulo a prime or prime power."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _check(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.residue - o.residue, self.modulus)

    def __rsub__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else o - self

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def inv(self):
        return PrimeFieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._check(other)
        return NotImplemented if o is NotImplemented else o * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        return PrimeFieldElement(pow(self.residue, k, self.modulus), self.modulus)

    def is_zero(self):
        return self.residue == 0

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __repr__(self):
        return f"{self.residue} (mod {self.modulus})"


class PrimeField:
    """F_p (or the ring Z/p^m) as a scalar domain for generic linear algebra."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.zero = PrimeFieldElement(0, modulus)
        self.one = PrimeFieldElement(1, modulus)

    def from_int(self, x: int):
        return PrimeFieldElement(x, self.modulus)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return x
        return PrimeFieldElement(int(x), self.modulus)

    def sort_key(self, x):
        return (x.residue,)

    def format(self, x):
        return str(x.residue)

    def __repr__(self):
        return f"PrimeField({self.modulus})"


# ---------------------------------------------------------------------------
# rational reconstruction
# ---------------------------------------------------------------------------


def rational_reconstruct(residue: int, modulus: int):
    """Recover the unique a/b with |a|, b <= sqrt(M/2), gcd(b, M) = 1 and
    a = b*residue (mod M); None if no such fraction exists."""
    if not 0 <= residue < modulus:
        raise ValueError("residue out of range")
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, residue
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    a, b = r1, t1
    if b < 0:
        a, b = -a, -b
    if b == 0 or b > bound or abs(a) > bound:
        return None
    if math.gcd(b, modulus) != 1 or math.gcd(abs(a) if a else b, b) != 1:
        return None
    return Rat(a, b)


def cyclotomic_arithmetic(a: Cyc, b, op: str):
    """Uniform entry point for field operations on cyclotomic numbers."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown operation {op!r}")
