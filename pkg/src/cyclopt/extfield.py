"""Construction of F_{p^m} = F_p[x]/(pi(x)) with a primitive root.

Elements are stored as packed integers: the element sum(c_i * alpha^i) has
index sum(c_i * p^i), so an index is just the coefficient vector read as a
base-p numeral.  Index 0 is the zero element, index 1 is the one element,
and index p is alpha itself.  Packing keeps the exp/log tables flat numpy
arrays, which is what makes the exponent-space scans cheap.

FieldSpec carries the tables when p^m <= table_limit: exp_array[t] is the
packed index of alpha^t and log_array[idx] inverts it (-1 marks zero).
Beyond the limit the element operations fall back to square-and-multiply
and Tonelli-Shanks, so nothing here silently requires the tables except
full-field enumeration (count_N), which raises LimitError instead.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional

import numpy as np

from .errors import LimitError, ParameterError, PrimitivityError
from .gfpoly import (
    Poly,
    is_irreducible,
    is_prime,
    one,
    poly_divmod,
    poly_mul,
    powmod_frobenius,
    validate_modulus,
    x,
)

DEFAULT_TABLE_LIMIT = 1 << 22


def factorint(n: int) -> dict[int, int]:
    """Prime factorization, trial division to 10^6 then Pollard rho."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= 10**6:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n == 1:
        return factors
    stack = [n]
    while stack:
        v = stack.pop()
        if is_prime(v):
            factors[v] = factors.get(v, 0) + 1
            continue
        stack.extend(_pollard_rho_split(v))
    return factors


def _pollard_rho_split(n: int) -> tuple[int, int]:
    if n % 2 == 0:
        return 2, n // 2
    rng = random.Random(0xC0DE ^ n)
    while True:
        c = rng.randrange(1, n)
        f = lambda v: (v * v + c) % n
        slow = fast = rng.randrange(n)
        d = 1
        while d == 1:
            slow = f(slow)
            fast = f(f(fast))
            d = _gcd(abs(slow - fast), n)
        if d != n:
            return d, n // d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class ExtElem:
    """Element of F_{p^m}, identified by its packed index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: "FieldSpec", idx: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "idx", idx)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElem is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.unpack(self.idx)

    def is_zero(self) -> bool:
        return self.idx == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtElem)
            and self.field.key == other.field.key
            and self.idx == other.idx
        )

    def __hash__(self) -> int:
        return hash((self.field.key, self.idx))

    def __add__(self, other: "ExtElem") -> "ExtElem":
        return ExtElem(self.field, self.field.add_idx(self.idx, other.idx))

    def __sub__(self, other: "ExtElem") -> "ExtElem":
        return ExtElem(self.field, self.field.sub_idx(self.idx, other.idx))

    def __neg__(self) -> "ExtElem":
        return ExtElem(self.field, self.field.neg_idx(self.idx))

    def __mul__(self, other: "ExtElem") -> "ExtElem":
        return elem_mul(self, other)

    def __pow__(self, k: int) -> "ExtElem":
        return elem_pow(self, k)

    def __repr__(self) -> str:
        return f"ExtElem{list(self.coeffs)}"


class FieldSpec:
    """F_{p^m} with defining primitive polynomial pi and optional tables."""

    def __init__(self, p: int, m: int, pi: Poly, table_limit: int = DEFAULT_TABLE_LIMIT):
        self.p = p
        self.m = m
        self.pi = pi
        self.q = p**m
        self.n = self.q - 1
        self.table_limit = table_limit
        self.key = (p, m, pi.coeffs)
        self._weights = tuple(p**i for i in range(m))
        self._n_factors: Optional[dict[int, int]] = None
        self._exp: Optional[np.ndarray] = None
        self._log: Optional[np.ndarray] = None
        self._digits: Optional[np.ndarray] = None
        if self.q <= table_limit:
            self._build_tables()

    # -- packing ---------------------------------------------------------

    def unpack(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(idx % self.p)
            idx //= self.p
        return tuple(out)

    def pack(self, coeffs: Iterable[int]) -> int:
        cs = list(coeffs)
        if len(cs) > self.m:
            raise ParameterError(f"coefficient vector longer than degree {self.m}")
        return sum((c % self.p) * w for c, w in zip(cs, self._weights))

    def element(self, coeffs: Iterable[int]) -> ExtElem:
        return ExtElem(self, self.pack(coeffs))

    def from_idx(self, idx: int) -> ExtElem:
        if not 0 <= idx < self.q:
            raise ParameterError(f"element index {idx} out of range")
        return ExtElem(self, idx)

    def scalar(self, c: int) -> ExtElem:
        """Embed c from the base field."""
        return ExtElem(self, c % self.p)

    @property
    def zero(self) -> ExtElem:
        return ExtElem(self, 0)

    @property
    def one(self) -> ExtElem:
        return ExtElem(self, 1)

    @property
    def alpha(self) -> ExtElem:
        if self.m == 1:
            return ExtElem(self, (-self.pi.coeffs[0]) % self.p)
        return ExtElem(self, self.p)

    # -- index arithmetic (no tables required) ----------------------------

    def add_idx(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        for w in self._weights:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
        return out

    def neg_idx(self, a: int) -> int:
        p = self.p
        out = 0
        for w in self._weights:
            out += ((-a) % p) * w
            a //= p
        return out

    def sub_idx(self, a: int, b: int) -> int:
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % self.n])
        prod = poly_mul(Poly(self.p, self.unpack(a)), Poly(self.p, self.unpack(b)))
        return self.pack(poly_divmod(prod, self.pi)[1].coeffs)

    def pow_idx(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                raise ParameterError("0^0 is undefined here")
            if k < 0:
                raise ZeroDivisionError("inversion of zero")
            return 0
        k %= self.n
        if self._log is not None:
            return int(self._exp[int(self._log[a]) * k % self.n])
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul_idx(result, base)
            base = self.mul_idx(base, base)
            k >>= 1
        return result

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return self.pow_idx(a, self.n - 1)

    # -- tables ------------------------------------------------------------

    def _build_tables(self) -> None:
        p, m, n = self.p, self.m, self.n
        # one multiplication by alpha per step: shift digits, reduce by pi
        red = tuple((-c) % p for c in self.pi.coeffs[:m])
        exp = np.empty(n, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        digits = [0] * m
        digits[0] = 1
        idx = 1
        for t in range(n):
            exp[t] = idx
            log[idx] = t
            top = digits[m - 1]
            for i in range(m - 1, 0, -1):
                digits[i] = (digits[i - 1] + top * red[i]) % p
            digits[0] = top * red[0] % p
            idx = 0
            for i in range(m - 1, -1, -1):
                idx = idx * p + digits[i]
        if idx != 1:
            raise PrimitivityError("alpha failed to cycle back to 1; bad field build")
        self._exp = exp
        self._log = log

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    def exp_array(self) -> np.ndarray:
        if self._exp is None:
            raise LimitError(
                f"field of size {self.q} exceeds table limit {self.table_limit}"
            )
        return self._exp

    def log_array(self) -> np.ndarray:
        self.exp_array()
        return self._log

    def digits_table(self) -> np.ndarray:
        """(q, m) uint8 array: base-p digits of every packed index."""
        if self.q > self.table_limit:
            raise LimitError(
                f"field of size {self.q} exceeds table limit {self.table_limit}"
            )
        if self._digits is None:
            t = np.arange(self.q, dtype=np.int64)
            dtype = np.uint8 if self.p <= 256 else np.int16
            digs = np.empty((self.q, self.m), dtype=dtype)
            for i in range(self.m):
                digs[:, i] = t % self.p
                t //= self.p
            self._digits = digs
        return self._digits

    def pack_weights(self) -> np.ndarray:
        return np.asarray(self._weights, dtype=np.int64)

    def exp(self, t: int) -> ExtElem:
        """alpha^t."""
        return ExtElem(self, self.pow_idx(self.alpha.idx, t))

    def log(self, elem: ExtElem) -> int:
        if elem.idx == 0:
            raise ParameterError("zero has no discrete log")
        if self._log is not None:
            return int(self._log[elem.idx])
        raise LimitError("discrete log requires tables for this field size")

    # -- misc ---------------------------------------------------------------

    def n_factorization(self) -> dict[int, int]:
        if self._n_factors is None:
            self._n_factors = factorint(self.n)
        return self._n_factors

    def describe(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "pi": list(self.pi.coeffs),
            "n": self.n,
        }

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, pi={list(self.pi.coeffs)})"


def _order_of_x_mod(pi: Poly, n: int, n_factors: dict[int, int]) -> int:
    """Multiplicative order of the class of x modulo irreducible pi."""
    if powmod_frobenius(x(pi.p), n, pi) != one(pi.p):
        return 0  # x is not a unit of full order (e.g. pi = x)
    order = n
    for prime in n_factors:
        while order % prime == 0 and powmod_frobenius(x(pi.p), order // prime, pi) == one(pi.p):
            order //= prime
    return order


def build_field(
    p: int,
    m: int,
    pi: Optional[Poly] = None,
    table_limit: int = DEFAULT_TABLE_LIMIT,
) -> FieldSpec:
    """Construct F_{p^m} with verified-primitive pi.

    When pi is omitted, monic degree-m candidates are tried in ascending
    lexicographic order of their coefficient tuples (c_0, ..., c_{m-1}) and
    the first irreducible-and-primitive one wins, so the default field for
    a given (p, m) is reproducible.
    """
    if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p!r}")
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"m must be a positive integer, got {m!r}")
    validate_modulus(p)
    n = p**m - 1
    n_factors = factorint(n)
    if pi is not None:
        if not isinstance(pi, Poly):
            pi = Poly(p, pi)  # accept a raw ascending coefficient sequence
        if pi.p != p:
            raise ParameterError("pi has the wrong coefficient modulus")
        if pi.degree != m or not pi.is_monic():
            raise ParameterError(f"pi must be monic of degree {m}")
        if not is_irreducible(pi):
            raise PrimitivityError(f"pi = {pi} is not irreducible over F_{p}")
        order = _order_of_x_mod(pi, n, n_factors)
        if order != n:
            raise PrimitivityError(
                f"pi = {pi} is irreducible but not primitive: its root has order {order}, need {n}"
            )
        return FieldSpec(p, m, pi, table_limit)
    for idx in range(p**m):
        coeffs = []
        t = idx
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        cand = Poly(p, coeffs + [1])
        if not is_irreducible(cand):
            continue
        if _order_of_x_mod(cand, n, n_factors) == n:
            return FieldSpec(p, m, cand, table_limit)
    raise PrimitivityError(f"no primitive polynomial of degree {m} over F_{p}")


_field_cache: dict[tuple, FieldSpec] = {}


def get_field(
    p: int,
    m: int,
    pi: Optional[Poly] = None,
    table_limit: int = DEFAULT_TABLE_LIMIT,
) -> FieldSpec:
    """build_field with memoization; checkers and scans share fields."""
    if pi is not None and not isinstance(pi, Poly):
        pi = Poly(p, pi)
    key = (p, m, None if pi is None else pi.coeffs, table_limit)
    if key not in _field_cache:
        _field_cache[key] = build_field(p, m, pi, table_limit)
    return _field_cache[key]


def _require_same_field(a: ExtElem, b: ExtElem) -> FieldSpec:
    if a.field.key != b.field.key:
        raise ParameterError("elements from different fields")
    return a.field


def elem_mul(a: ExtElem, b: ExtElem) -> ExtElem:
    f = _require_same_field(a, b)
    return ExtElem(f, f.mul_idx(a.idx, b.idx))


def elem_inv(a: ExtElem) -> ExtElem:
    return ExtElem(a.field, a.field.inv_idx(a.idx))


def elem_pow(a: ExtElem, k: int) -> ExtElem:
    return ExtElem(a.field, a.field.pow_idx(a.idx, k))


def eta(a: ExtElem) -> int:
    """Quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0."""
    if a.idx == 0:
        return 0
    f = a.field
    if f.has_tables:
        return 1 if f.log(a) % 2 == 0 else -1
    return 1 if f.pow_idx(a.idx, f.n // 2) == 1 else -1


def count_N(i: int, j: int, spec: FieldSpec) -> int:
    """|{x in F_{p^m} \\ {0,-1} : eta(x) = i, eta(x+1) = j}| by enumeration."""
    if i not in (1, -1) or j not in (1, -1):
        raise ParameterError("i and j must be +1 or -1")
    log = spec.log_array()  # raises LimitError when the field is too large
    p = spec.p
    idx = np.arange(spec.q, dtype=np.int64)
    c0 = idx % p
    xp1 = idx - c0 + (c0 + 1) % p
    keep = (idx != 0) & (xp1 != 0)
    sign_x = np.where(log[idx[keep]] % 2 == 0, 1, -1)
    sign_x1 = np.where(log[xp1[keep]] % 2 == 0, 1, -1)
    return int(np.count_nonzero((sign_x == i) & (sign_x1 == j)))


def sqrt_in_field(c: ExtElem) -> Optional[tuple[ExtElem, ExtElem]]:
    """Both square roots of c, or None when c is a nonsquare.

    Returns (0, 0) for c = 0.  The pair is ordered by discrete log (packed
    index beyond the table limit) so output is deterministic.
    """
    f = c.field
    if c.idx == 0:
        return f.zero, f.zero
    if eta(c) == -1:
        return None
    if f.has_tables:
        k = f.log(c)
        r1 = f.pow_idx(f.alpha.idx, k // 2)
    else:
        r1 = _tonelli_shanks_idx(f, c.idx)
    r2 = f.neg_idx(r1)
    if f.has_tables:
        first = min(r1, r2, key=lambda v: int(f.log_array()[v]))
    else:
        first = min(r1, r2)
    second = r2 if first == r1 else r1
    return ExtElem(f, first), ExtElem(f, second)


def _tonelli_shanks_idx(f: FieldSpec, c: int) -> int:
    """Square root of a known square c, using alpha as the known nonsquare."""
    n = f.n
    q_odd, s = n, 0
    while q_odd % 2 == 0:
        q_odd //= 2
        s += 1
    if s == 1:
        # field size q = n+1 is 3 mod 4, so c^((q+1)/4) works directly
        return f.pow_idx(c, (n + 2) // 4)
    zc = f.pow_idx(f.alpha.idx, q_odd)
    t = f.pow_idx(c, q_odd)
    r = f.pow_idx(c, (q_odd + 1) // 2)
    mv = s
    while t != 1:
        t2i, i = t, 0
        while t2i != 1:
            t2i = f.mul_idx(t2i, t2i)
            i += 1
        b = zc
        for _ in range(mv - i - 1):
            b = f.mul_idx(b, b)
        r = f.mul_idx(r, b)
        zc = f.mul_idx(b, b)
        t = f.mul_idx(t, zc)
        mv = i
    return r


def multiplicative_order(a: ExtElem) -> int:
    if a.idx == 0:
        raise ParameterError("zero has no multiplicative order")
    f = a.field
    order = f.n
    for prime in f.n_factorization():
        while order % prime == 0 and f.pow_idx(a.idx, order // prime) == 1:
            order //= prime
    return order
