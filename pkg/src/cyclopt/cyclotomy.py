"""p-cyclotomic cosets modulo n = p^m - 1.

C_j is the orbit of j under multiplication by p mod n.  Coset sizes divide
m, the leader is the smallest member, and lemma1_size_is_m offers quick
sufficient criteria for |C_e| = m as an advisory check: sufficient but not
necessary, so callers that need the size always confirm with coset_of
(construct_code does exactly that).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import ParameterError


@dataclass(frozen=True)
class Coset:
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def _check_range(j: int, p: int, m: int) -> int:
    n = p**m - 1
    if not 0 <= j < n:
        raise ParameterError(f"exponent {j} out of range [0, {n})")
    return n


def coset_of(j: int, p: int, m: int) -> Coset:
    n = _check_range(j, p, m)
    members = [j]
    v = j * p % n
    while v != j:
        members.append(v)
        v = v * p % n
    return Coset(min(members), tuple(sorted(members)))


def in_C1(e: int, p: int, m: int) -> bool:
    """True iff e = p^i (mod n) for some i."""
    n = _check_range(e, p, m)
    v = 1 % n
    for _ in range(m):
        if v == e:
            return True
        v = v * p % n
    return False


def lemma1_size_is_m(e: int, p: int, m: int) -> tuple[bool, str]:
    """Advisory size-m criteria.

    Returns (True, "gcd-small") when 1 <= gcd(e, n) <= p-1, or
    (True, "product-test") when gcd(e,n)*gcd(p^j-1, n) is never 0 mod n for
    1 <= j < m.  (False, "criteria-failed") proves nothing; confirm with
    coset_of.
    """
    n = _check_range(e, p, m)
    if e == 0:
        return False, "criteria-failed"
    g = gcd(e, n)
    if 1 <= g <= p - 1:
        return True, "gcd-small"
    if all((g * gcd(p**j - 1, n)) % n != 0 for j in range(1, m)):
        return True, "product-test"
    return False, "criteria-failed"


def coset_leaders(p: int, m: int) -> Iterator[Coset]:
    """Every distinct coset once, by ascending leader, 0 and 1 included."""
    n = p**m - 1
    seen = bytearray(n)
    for j in range(n):
        if seen[j]:
            continue
        c = coset_of(j, p, m)
        for v in c.members:
            seen[v] = 1
        yield c
