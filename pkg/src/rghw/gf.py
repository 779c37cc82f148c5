"""Exact arithmetic in small finite fields GF(q), q = p^e <= 2^16.

Field elements are plain Python ints in 0..q-1.  For a prime field the
int is the residue itself; for an extension field it is the base-p digit
encoding of the polynomial representative (digit i = coefficient of x^i),
so 0 and 1 always encode the additive and multiplicative identities and
the encoding is canonical: equal ints are equal elements.

The reduction modulus for e > 1 is the lexicographically smallest monic
irreducible polynomial of degree e over GF(p), where "lexicographically
smallest" compares coefficient vectors from the highest degree down,
i.e. picks the candidate with the smallest base-p integer encoding of
its low coefficients.  Irreducibility is checked by trial division by
every monic polynomial of degree 1..e//2, which is cheap in this range.

Fields with q <= 256 precompute full addition/multiplication/inverse
tables so the oracle inner loops run on table lookups; larger fields
fall back to on-the-fly digit arithmetic.
"""

from __future__ import annotations

from .errors import DivisionByZero, NotAPrimePower

_MAX_Q = 1 << 16
_TABLE_Q = 256


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise NotAPrimePower."""
    p = _smallest_prime_factor(q)
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise NotAPrimePower(f"q = {q} is not a prime power (divisible by {p} and {m})")
    return p, e


def _int_to_poly(t: int, p: int, e: int) -> list[int]:
    """Base-p digits of t, low coefficient first, padded to length e."""
    digits = []
    for _ in range(e):
        digits.append(t % p)
        t //= p
    return digits


def _poly_to_int(coeffs: list[int], p: int) -> int:
    t = 0
    for c in reversed(coeffs):
        t = t * p + c
    return t


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num mod den over GF(p); den is monic.  Trailing zeros trimmed."""
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - c * den[j]) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg(f)//2."""
    e = len(f) - 1
    for deg in range(1, e // 2 + 1):
        for t in range(p**deg):
            den = _int_to_poly(t, p, deg) + [1]
            if not _poly_mod(f, den, p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Coefficients (low first, monic leading 1 included) of the modulus."""
    for t in range(p**e):
        f = _int_to_poly(t, p, e) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {e} over GF({p})")  # unreachable


class Field:
    """GF(q) with elements encoded as ints 0..q-1.

    Parameters
    ----------
    q : int
        Field order, a prime power with 2 <= q <= 2**16.

    Attributes
    ----------
    q, p, e : int
        Order, characteristic, extension degree.
    modulus : tuple[int, ...]
        Reduction modulus coefficients, low degree first, length e+1;
        empty tuple for prime fields.
    """

    __slots__ = ("q", "p", "e", "modulus", "_add_t", "_mul_t", "_neg_t", "_inv_t")

    def __init__(self, q: int):
        if not isinstance(q, int) or q < 2 or q > _MAX_Q:
            raise NotAPrimePower(f"q = {q!r} outside supported range 2..{_MAX_Q}")
        self.q = q
        self.p, self.e = _prime_power(q)
        self.modulus = _smallest_irreducible(self.p, self.e) if self.e > 1 else ()
        if q <= _TABLE_Q:
            self._build_tables()
        else:
            self._add_t = self._mul_t = self._neg_t = self._inv_t = None

    # -- construction helpers -------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        add_t = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        mul_t = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._add_t = add_t
        self._mul_t = mul_t
        self._neg_t = [self._neg_slow(a) for a in range(q)]
        inv_t = [0] * q
        for a in range(1, q):
            row = mul_t[a]
            for b in range(1, q):
                if row[b] == 1:
                    inv_t[a] = b
                    break
        self._inv_t = inv_t

    def _add_slow(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        da = _int_to_poly(a, p, self.e)
        db = _int_to_poly(b, p, self.e)
        return _poly_to_int([(x + y) % p for x, y in zip(da, db)], p)

    def _neg_slow(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return _poly_to_int([(-x) % p for x in _int_to_poly(a, p, self.e)], p)

    def _mul_slow(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a * b) % p
        da = _int_to_poly(a, p, self.e)
        db = _int_to_poly(b, p, self.e)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, list(self.modulus), p)
        rem += [0] * (self.e - len(rem))
        return _poly_to_int(rem, p)

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.q})")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def elements(self) -> list[int]:
        """All field elements in ascending canonical encoding."""
        return list(range(self.q))

    # -- identity --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("rghw.Field", self.q))

    def __repr__(self) -> str:
        return f"Field({self.q})"
