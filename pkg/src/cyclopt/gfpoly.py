"""Dense polynomial arithmetic over a prime field F_p.

A polynomial is a Poly instance holding its modulus p and a tuple of
coefficients in ascending degree order (coeffs[i] is the coefficient of
x^i).  The zero polynomial has an empty coefficient tuple and degree -1.
Trailing zeros are never stored, so equal polynomials compare equal and
hash equal.

Coefficients are machine integers in [0, p) with p < 2**31, which keeps
every intermediate product inside 64 bits.  Degrees stay in the low
thousands here (the largest routine object is x^n - 1 with n < 2**22),
so schoolbook multiplication and long division are sufficient.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_MODULUS = 1 << 31

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_checked_moduli: set[int] = set()


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24 (covers 2**64)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_modulus(p: int) -> int:
    """Check that p is an odd prime in range, once per distinct value."""
    if p not in _checked_moduli:
        if not isinstance(p, int) or p < 3 or p >= MAX_MODULUS:
            raise ValueError(f"modulus must be an odd prime in [3, 2^31), got {p!r}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        _checked_moduli.add(p)
    return p


class Poly:
    """Immutable dense polynomial over F_p."""

    __slots__ = ("p", "coeffs")

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        validate_modulus(p)
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_sub(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def __repr__(self) -> str:
        return f"Poly({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return poly_pretty(self)


def zero(p: int) -> Poly:
    return Poly(p, ())


def one(p: int) -> Poly:
    return Poly(p, (1,))


def x(p: int) -> Poly:
    return Poly(p, (0, 1))


def monomial(p: int, k: int, c: int = 1) -> Poly:
    """c * x^k."""
    return Poly(p, (0,) * k + (c,))


def constant(p: int, c: int) -> Poly:
    return Poly(p, (c,))


def _require_same_modulus(a: Poly, b: Poly) -> int:
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    return a.p


def poly_add(a: Poly, b: Poly) -> Poly:
    p = _require_same_modulus(a, b)
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    cs = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        cs[i] = (cs[i] + c) % p
    return Poly(p, cs)


def poly_sub(a: Poly, b: Poly) -> Poly:
    p = _require_same_modulus(a, b)
    cs = list(a.coeffs) + [0] * max(0, len(b.coeffs) - len(a.coeffs))
    for i, c in enumerate(b.coeffs):
        cs[i] = (cs[i] - c) % p
    return Poly(p, cs)


def poly_neg(a: Poly) -> Poly:
    return Poly(a.p, ((-c) % a.p for c in a.coeffs))


def poly_scale(a: Poly, c: int) -> Poly:
    c %= a.p
    return Poly(a.p, ((ci * c) % a.p for ci in a.coeffs))


def poly_mul(a: Poly, b: Poly) -> Poly:
    p = _require_same_modulus(a, b)
    if a.is_zero() or b.is_zero():
        return zero(p)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] = (out[i + j] + ai * bj) % p
    return Poly(p, out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    p = _require_same_modulus(a, b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.degree < b.degree:
        return zero(p), a
    inv_lead = pow(b.coeffs[-1], -1, p)
    rem = list(a.coeffs)
    db = b.degree
    quot = [0] * (a.degree - db + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        factor = c * inv_lead % p
        quot[i] = factor
        for j, bj in enumerate(b.coeffs):
            rem[i + j] = (rem[i + j] - factor * bj) % p
    return Poly(p, quot), Poly(p, rem[:db])


def poly_monic(a: Poly) -> Poly:
    if a.is_zero():
        raise ValueError("zero polynomial has no monic associate")
    if a.coeffs[-1] == 1:
        return a
    return poly_scale(a, pow(a.coeffs[-1], -1, a.p))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    _require_same_modulus(a, b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_pow(a: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError("negative exponent")
    result = one(a.p)
    base = a
    while k:
        if k & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        k >>= 1
    return result


def poly_eval(a: Poly, c: int) -> int:
    """Horner evaluation at c in F_p."""
    c %= a.p
    acc = 0
    for coeff in reversed(a.coeffs):
        acc = (acc * c + coeff) % a.p
    return acc


def powmod_frobenius(base: Poly, q: int, modulus: Poly) -> Poly:
    """base^q mod modulus by square-and-multiply on the bits of q."""
    _require_same_modulus(base, modulus)
    if modulus.is_zero():
        raise ZeroDivisionError("zero modulus")
    if q < 1:
        raise ValueError("exponent must be >= 1")
    result = one(base.p)
    acc = poly_divmod(base, modulus)[1]
    while q:
        if q & 1:
            result = poly_divmod(poly_mul(result, acc), modulus)[1]
        q >>= 1
        if q:
            acc = poly_divmod(poly_mul(acc, acc), modulus)[1]
    return result


def distinct_degree_parts(f: Poly, max_deg: int | None = None) -> dict[int, Poly]:
    """Split monic(f) into parts by irreducible-factor degree.

    Returns {r: product of the irreducible factors of f of degree exactly r,
    with multiplicity}.  The degree-r factors are found as
    gcd(f, x^(p^r) - x); multiplicities are recovered by dividing each
    extracted factor out repeatedly.  The parts multiply back to monic(f)
    when max_deg covers deg f.
    """
    if f.degree < 1:
        raise ValueError("need a non-constant polynomial")
    p = f.p
    work = poly_monic(f)
    limit = f.degree if max_deg is None else min(max_deg, f.degree)
    parts: dict[int, Poly] = {}
    xp = x(p)
    for r in range(1, limit + 1):
        if work.degree < r:
            break
        frob = powmod_frobenius(xp, p**r, work)
        g = poly_gcd(work, poly_sub(frob, poly_divmod(xp, work)[1]))
        if g.degree < 1:
            continue
        part = one(p)
        h = g
        while h.degree > 0:
            work = poly_divmod(work, h)[0]
            part = poly_mul(part, h)
            h = poly_gcd(work if not work.is_zero() else one(p), h)
        parts[r] = part
    return parts


def distinct_degree_profile(f: Poly, max_deg: int | None = None) -> dict[int, int]:
    """{factor degree r: total degree of the degree-r part, with multiplicity}."""
    return {r: part.degree for r, part in distinct_degree_parts(f, max_deg).items()}


def is_irreducible(f: Poly) -> bool:
    """True iff f has no non-constant proper factor.

    Any reducible f has an irreducible factor of degree <= deg(f)/2, and a
    factor of degree d divides gcd(f, x^(p^d) - x), so checking those gcds
    up to deg(f)//2 decides the question.
    """
    if f.degree < 1:
        raise ValueError("irreducibility is undefined for constants")
    if f.degree == 1:
        return True
    p = f.p
    xp = x(p)
    if f[0] == 0:
        return False
    for r in range(1, f.degree // 2 + 1):
        frob = powmod_frobenius(xp, p**r, f)
        g = poly_gcd(f, poly_sub(frob, poly_divmod(xp, f)[1]))
        if g.degree > 0:
            return False
    return True


def poly_pretty(a: Poly) -> str:
    """Human form, highest degree first: '2x^3 + 2x^2 + 3x + 3'."""
    if a.is_zero():
        return "0"
    terms = []
    for i in range(a.degree, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            terms.append(xpart if c == 1 else f"{c}{xpart}")
    return " + ".join(terms)
