"""Finite fields GF(p^k) with a deterministic modulus.

Elements are stored as plain ints: ``a = sum(c_i * p**i)`` where ``c_i`` are the
coefficients of the residue polynomial, lowest degree first.  All heavy code
in the package works on these ints through the field's methods; ``FieldElem``
is a small operator-friendly wrapper for callers.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

# fields up to this size get exp/log/Zech tables
TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p) as coefficient lists, lowest degree first ---

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    """Remainder of f by monic-or-not g over GF(p)."""
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    while len(_trim(f)) - 1 >= dg:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return out


def _pgcd(f, g, p):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _ppowmod(f, e, m, p):
    result = [1]
    base = _pmod(f, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(f, p):
    """Rabin-style test: no factor of degree <= deg/2 via gcd(t^(p^j) - t, f)."""
    k = len(f) - 1
    if k <= 1:
        return k == 1
    t = [0, 1]
    h = t
    for _ in range(k // 2):
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def _monic_polys(p, k):
    """Monic degree-k polys in ascending lex order, top coefficient first."""
    for n in range(p ** k):
        # n's base-p digits read from the t^(k-1) coefficient downwards
        lower = []
        for _ in range(k):
            lower.append(n % p)
            n //= p
        yield lower + [1]


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    for f in _monic_polys(p, k):
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """GF(p^k) with int-encoded elements.  Build through :func:`make_field`."""

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = tuple(modulus)
        self._exp = self._log = self._zech = None
        self._embeddings: dict = {}
        if k > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return make_field, (self.p, self.k)

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    # --- encoding ---

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_digits(self, digits: Iterable[int]) -> int:
        digits = [d % self.p for d in digits]
        if len(digits) > self.k:
            raise ValueError(f"{len(digits)} digits for a degree-{self.k} field")
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, int):
            return FieldElem(self, value % self.p)
        return FieldElem(self, self.from_digits(value))

    def coerce(self, x) -> int:
        """Encode a user scalar: an int is a residue mod p, a sequence is digits."""
        if isinstance(x, FieldElem):
            if x.field is not self:
                raise ValueError("element belongs to another field")
            return x.value
        if isinstance(x, int):
            return x % self.p
        return self.from_digits(x)

    def elements(self):
        return range(self.q)

    @property
    def gen(self) -> int:
        """The residue class of t."""
        return self.p if self.k > 1 else 0

    # --- slow polynomial arithmetic (table builder and fallback) ---

    def _poly_mul(self, a, b):
        if not a or not b:
            return 0
        prod = _pmul(list(self.digits(a)), list(self.digits(b)), self.p)
        return self.from_digits(_pmod(prod, self.modulus, self.p)) if prod else 0

    def _poly_add(self, a, b):
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        order = q - 1
        factors = prime_factors(order)

        def primitive(c):
            return all(self._slow_pow(c, order // r) != 1 for r in factors)

        # prefer a primitive element a*t + c: multiplying by it is a cheap digit shift
        g = next((c for c in range(p, p * p) if primitive(c)), None)
        exp = [0] * order
        log = [0] * q
        if g is not None:
            a, c = divmod(g, p)
            low = self.modulus[:k]
            weights = [p ** i for i in range(k)]
            x = [1] + [0] * (k - 1)
            for i in range(order):
                v = sum(d * w for d, w in zip(x, weights))
                exp[i] = v
                log[v] = i
                h = a * x[-1] % p
                x = [(a * (x[j - 1] if j else 0) + c * x[j] - h * low[j]) % p for j in range(k)]
        else:
            g = next(c for c in range(2, q) if primitive(c))
            x = 1
            for i in range(order):
                exp[i] = x
                log[x] = i
                x = self._poly_mul(x, g)
        zech = [0] * order
        for i in range(order):
            v = exp[i]
            s = v - v % p + (v % p + 1) % p  # adding 1 only touches the constant digit
            zech[i] = log[s] if s else -1
        self._exp, self._log, self._zech = exp, log, zech
        self.primitive = g

    def _slow_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul(result, a)
            a = self._poly_mul(a, a)
            e >>= 1
        return result

    # --- arithmetic on ints ---

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self._log is None:
            return self._poly_add(a, b)
        log = self._log
        la = log[a]
        z = self._zech[(log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if not a:
            return 0
        if self.k == 1:
            return self.p - a
        if self.p == 2:
            return a
        if self._log is None:
            return self.from_digits(-d for d in self.digits(a))
        return self._exp[(self._log[a] + (self.q - 1) // 2) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        if self._log is None:
            return self._poly_mul(a, b)
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is None:
            return self._slow_pow(a, self.q - 2)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if not a:
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        if self._log is None:
            return self._slow_pow(a, e % (self.q - 1))
        return self._exp[self._log[a] * e % (self.q - 1)]

    def frob(self, a: int, e: int = 1) -> int:
        """a -> a^(p^e); e is taken modulo k."""
        return self.pow(a, self.p ** (e % self.k))

    def pth_root(self, a: int) -> int:
        return self.frob(a, self.k - 1)

    # --- vector kernels used by the linear algebra ---

    def axpy(self, y: list, c: int, x: list) -> list:
        """y + c*x."""
        if self.k == 1:
            p = self.p
            return [(u + c * v) % p for u, v in zip(y, x)]
        add, mul = self.add, self.mul
        return [add(u, mul(c, v)) for u, v in zip(y, x)]

    def scale(self, c: int, x: list) -> list:
        if self.k == 1:
            p = self.p
            return [c * v % p for v in x]
        mul = self.mul
        return [mul(c, v) for v in x]

    def dot(self, x, y) -> int:
        if self.k == 1:
            return sum(a * b for a, b in zip(x, y)) % self.p
        add, mul = self.add, self.mul
        s = 0
        for a, b in zip(x, y):
            if a and b:
                s = add(s, mul(a, b))
        return s

    def sum(self, xs: Iterable[int]) -> int:
        if self.k == 1:
            return sum(xs) % self.p
        s = 0
        for x in xs:
            s = self.add(s, x)
        return s

    # --- subfields and embeddings ---

    def contains_subfield(self, other: "FiniteField") -> bool:
        return other.p == self.p and self.k % other.k == 0

    def embedding(self, K: "FiniteField") -> tuple[int, ...]:
        """Image table of self -> K; t maps to the smallest root of self.modulus in K."""
        if K is self:
            return tuple(range(self.q))
        cached = self._embeddings.get(K.k)
        if cached is not None:
            return cached
        if not K.contains_subfield(self):
            raise ValueError(f"{self} is not a subfield of {K}")
        if self.k == 1:
            table = tuple(range(self.p))
        else:
            mod = self.modulus
            beta = next(b for b in K.elements() if _horner(K, mod, b) == 0)
            powers = [1]
            for _ in range(self.k - 1):
                powers.append(K.mul(powers[-1], beta))
            table = tuple(
                K.sum(K.mul(d, pw) for d, pw in zip(self.digits(a), powers))
                for a in range(self.q)
            )
        self._embeddings[K.k] = table
        return table

    def restriction(self, K: "FiniteField") -> dict[int, int]:
        """Inverse of :meth:`embedding` on its image."""
        return {img: a for a, img in enumerate(self.embedding(K))}


def _horner(K, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = K.add(K.mul(acc, x), c % K.p)
    return acc


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FiniteField:
    """GF(p^k) with the lexicographically first monic irreducible modulus.

    >>> make_field(3, 2).modulus
    (1, 0, 1)
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree must be a positive integer, got {k!r}")
    return FiniteField(p, k, canonical_modulus(p, k))


@dataclass(frozen=True)
class FieldElem:
    field: FiniteField
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("mixed fields")
            return other.value
        return other % self.field.p

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.value}"
        return f"{self.field!r}{list(self.coeffs)}"


def frobenius(a: FieldElem, e: int) -> FieldElem:
    return FieldElem(a.field, a.field.frob(a.value, e))


def pth_root(a: FieldElem) -> FieldElem:
    """The unique b with b**p == a."""
    return FieldElem(a.field, a.field.pth_root(a.value))


def _q_exponent(K: FiniteField, q: int) -> int:
    s = round(math.log(q, K.p)) if q > 1 else 0
    if s < 1 or K.p ** s != q or K.k % s:
        raise ValueError(f"{q} is not the size of a subfield of {K}")
    return s


def orbit_of(K: FiniteField, values: Sequence[int], q: int) -> list[tuple[int, ...]]:
    """Orbit of an int vector under v -> v^q, in discovery order."""
    s = _q_exponent(K, q)
    start = tuple(values)
    out = [start]
    cur = start
    while True:
        cur = tuple(K.frob(a, s) for a in cur)
        if cur == start:
            return out
        out.append(cur)


def galois_orbit(v: Sequence[FieldElem], q: int) -> set[tuple[FieldElem, ...]]:
    """Closure of v under componentwise a -> a^q."""
    if not v:
        return {()}
    K = v[0].field
    return {tuple(FieldElem(K, a) for a in w) for w in orbit_of(K, [a.value for a in v], q)}


def field_degree_of(v: Sequence[FieldElem], q: int) -> int:
    """[F(v) : F] for F = GF(q)."""
    if not v:
        return 1
    K = v[0].field
    return len(orbit_of(K, [a.value for a in v], q))
