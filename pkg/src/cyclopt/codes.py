"""Cyclic codes of length p^m - 1 whose parity checks are alpha, alpha^e, alpha^s.

The generator polynomial is (x+1) * m_alpha(x) * m_{alpha^e}(x), where
m_{alpha^i} is the minimal polynomial of alpha^i over F_p and s = (p^m-1)/2,
so that x+1 = m_{alpha^s}.  The three cyclotomic cosets C_1, C_e, C_s must be
pairwise disjoint for the product to be squarefree; construct_code refuses
overlapping exponents up front so callers get a precise diagnosis instead of
a repeated-root surprise.
"""

from dataclasses import dataclass
from functools import cached_property
import math

from .cyclotomy import coset_of, in_C1
from .errors import CosetOverlapError, ParameterError
from .extfield import FieldSpec
from .gfpoly import Poly, is_prime, monomial, poly_divmod, poly_mul


def minimal_polynomial(i: int, field: FieldSpec) -> Poly:
    """Minimal polynomial of alpha^i over F_p: prod_{j in C_i} (x - alpha^j).

    The product is accumulated with extension-field coefficients and then
    projected onto the base field.  Every coefficient must come out with all
    alpha^1..alpha^{m-1} digits exactly zero; a nonzero digit means the orbit
    was not Frobenius-closed, i.e. the field itself is broken.
    """
    if not 0 <= i < field.n:
        raise ParameterError(f"exponent {i} outside [0, {field.n})")
    members = coset_of(i, field.p, field.m).members
    # coeffs[t] is the packed index of the x^t coefficient; start from 1
    coeffs = [1]
    for j in members:
        root = field.exp(j).idx
        neg_root = field.neg_idx(root)
        nxt = [0] * (len(coeffs) + 1)
        for t, c in enumerate(coeffs):
            nxt[t + 1] = c  # shift = multiply by x
        for t, c in enumerate(coeffs):
            nxt[t] = field.add_idx(nxt[t], field.mul_idx(neg_root, c))
        coeffs = nxt
    projected = []
    for c in coeffs:
        if c >= field.p:
            raise ArithmeticError(
                f"coefficient {field.unpack(c)} of m_(alpha^{i}) is not in the "
                "base field; the field construction is inconsistent"
            )
        projected.append(c)
    return Poly(field.p, projected)


@dataclass(frozen=True)
class CodeSpec:
    """An assembled code: immutable, safe to share across worker threads."""

    field: FieldSpec
    e: int
    s: int
    g: Poly
    n: int
    k: int

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def nonzero_exponents(self) -> tuple[int, int, int]:
        return (1, self.e, self.s)

    @cached_property
    def coset_e(self):
        return coset_of(self.e, self.field.p, self.field.m)

    def descriptor(self) -> dict:
        """JSON-ready summary; distance and tags are appended by callers."""
        return {
            "p": self.field.p,
            "m": self.field.m,
            "e": self.e,
            "s": self.s,
            "pi": list(self.field.pi.coeffs),
            "g": list(self.g.coeffs),
            "n": self.n,
            "k": self.k,
        }


def construct_code(e: int, field: FieldSpec) -> CodeSpec:
    """Build the code with nonzeros {alpha, alpha^e, alpha^s}.

    Raises CosetOverlapError when the cosets C_1, C_e, C_s are not pairwise
    disjoint (e in C_1, e = s, or the degenerate s in C_1 which only occurs
    for p = 3, m = 1).
    """
    n = field.n
    s = n // 2
    if not isinstance(e, int) or not 0 <= e < n:
        raise ParameterError(f"exponent e must lie in [0, {n}), got {e!r}")
    if in_C1(e, field.p, field.m):
        raise CosetOverlapError(f"e = {e} lies in C_1; cosets C_1 and C_e coincide")
    if e == s:
        raise CosetOverlapError(f"e = {e} equals s; cosets C_e and C_s coincide")
    if in_C1(s, field.p, field.m):
        raise CosetOverlapError(f"s = {s} lies in C_1; cosets C_1 and C_s coincide")
    xp1 = minimal_polynomial(s, field)  # always x + 1 since alpha^s = -1
    g = poly_mul(poly_mul(xp1, minimal_polynomial(1, field)), minimal_polynomial(e, field))
    xn_minus_1 = monomial(field.p, n) + Poly(field.p, [-1])
    _, rem = poly_divmod(xn_minus_1, g)
    if not rem.is_zero():
        raise ArithmeticError("generator polynomial does not divide x^n - 1")
    return CodeSpec(field=field, e=e, s=s, g=g, n=n, k=n - g.degree)


def sphere_packing_optimal(n: int, k: int, d: int, p: int) -> bool:
    """True when no [n, k, 5] code over F_p exists, so distance 4 is best.

    A distance-5 code corrects 2 errors, hence needs disjoint radius-2 balls:
    p^k * V_2 <= p^n with V_2 = 1 + n(p-1) + C(n,2)(p-1)^2.  When V_2 exceeds
    p^(n-k) that packing is impossible and an [n, k, 4] code is optimal.
    Exact integer arithmetic throughout.
    """
    if d != 4:
        raise ParameterError(f"only distance-4 codes are assessed, got d = {d}")
    if not (isinstance(n, int) and isinstance(k, int)) or k < 1 or n < 1:
        raise ParameterError(f"need integers n >= k >= 1, got n = {n!r}, k = {k!r}")
    if k >= n:
        raise ParameterError(f"code has no redundancy: n = {n}, k = {k}")
    if not isinstance(p, int) or p < 2 or not is_prime(p):
        raise ParameterError(f"alphabet size must be prime, got {p!r}")
    v2 = 1 + n * (p - 1) + math.comb(n, 2) * (p - 1) ** 2
    return v2 > p ** (n - k)
