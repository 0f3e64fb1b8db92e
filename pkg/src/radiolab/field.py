"""Finite field arithmetic over GF(p^k) and Singer planar difference sets.

Elements of GF(p^k) are encoded as integers in ``0..q-1`` whose base-p
digits are the coefficients of a polynomial over GF(p), constant term
least significant.  The field is represented by its reducing polynomial,
chosen as the lexicographically smallest monic irreducible of the right
degree so that every run of the program builds the identical field.

Only what the graph-family constructors need lives here; this is not a
general-purpose finite field library.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPrimePower, ZeroInverse

__all__ = [
    "FieldSpec",
    "DifferenceSet",
    "make_field",
    "field_add",
    "field_neg",
    "field_sub",
    "field_mul",
    "field_pow",
    "field_inv",
    "primitive_element",
    "singer_difference_set",
    "is_planar_difference_set",
]


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(q) with q = p^k.

    ``modulus`` is the reducing polynomial as a coefficient tuple, constant
    term first, length k+1, leading coefficient 1.
    """

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]


@dataclass(frozen=True)
class DifferenceSet:
    """q+1 residues mod q^2+q+1 whose pairwise differences hit 1..q^2+q once each."""

    modulus: int
    elements: tuple[int, ...]

    def member_set(self) -> frozenset[int]:
        return frozenset(self.elements)


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, constant term first


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _encode(coeffs: list[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)

def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # m is monic; schoolbook remainder
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        shift = len(a) - 1 - dm
        if lead:
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        _poly_trim(a)
        if not a:
            break
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= k/2."""
    k = len(m) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not _poly_mod(m, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for low in range(p**k):
        m = _digits(low, p, k) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # impossible


# ---------------------------------------------------------------------------
# field construction and arithmetic


def _factorize(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


def make_field(q: int) -> FieldSpec:
    """Build GF(q), or raise NotPrimePower when q is not a prime power."""
    if q < 2:
        raise NotPrimePower(f"field order must be >= 2, got {q}")
    primes = _factorize(q)
    if len(primes) != 1:
        raise NotPrimePower(f"{q} has distinct prime factors {primes}")
    p = primes[0]
    k = 0
    m = q
    while m > 1:
        m //= p
        k += 1
    return FieldSpec(p=p, k=k, q=q, modulus=_smallest_irreducible(p, k))


def _check_range(f: FieldSpec, *elems: int) -> None:
    for a in elems:
        if not 0 <= a < f.q:
            raise ValueError(f"element {a} outside 0..{f.q - 1}")


def field_add(f: FieldSpec, a: int, b: int) -> int:
    _check_range(f, a, b)
    if f.k == 1:
        return (a + b) % f.p
    da, db = _digits(a, f.p, f.k), _digits(b, f.p, f.k)
    return _encode([(x + y) % f.p for x, y in zip(da, db)], f.p)


def field_neg(f: FieldSpec, a: int) -> int:
    _check_range(f, a)
    if f.k == 1:
        return (-a) % f.p
    return _encode([(-x) % f.p for x in _digits(a, f.p, f.k)], f.p)


def field_sub(f: FieldSpec, a: int, b: int) -> int:
    return field_add(f, a, field_neg(f, b))


def field_mul(f: FieldSpec, a: int, b: int) -> int:
    _check_range(f, a, b)
    if f.k == 1:
        return (a * b) % f.p
    prod = _poly_mul(_digits(a, f.p, f.k), _digits(b, f.p, f.k), f.p)
    return _encode(_poly_mod(prod, list(f.modulus), f.p), f.p)


def field_pow(f: FieldSpec, a: int, e: int) -> int:
    _check_range(f, a)
    if e < 0:
        return field_pow(f, field_inv(f, a), -e)
    result = 1
    base = a
    while e:
        if e & 1:
            result = field_mul(f, result, base)
        base = field_mul(f, base, base)
        e >>= 1
    return result


def field_inv(f: FieldSpec, a: int) -> int:
    """Multiplicative inverse; a^(q-2) since the unit group has order q-1."""
    if a == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    _check_range(f, a)
    return field_pow(f, a, f.q - 2)


def primitive_element(f: FieldSpec) -> int:
    """Smallest element (in encoding order) generating the unit group."""
    if f.q == 2:
        return 1
    prime_parts = _factorize(f.q - 1)
    for a in range(2, f.q):
        if all(field_pow(f, a, (f.q - 1) // r) != 1 for r in prime_parts):
            return a
    raise AssertionError("no primitive element found")  # impossible


# ---------------------------------------------------------------------------
# Singer difference sets


def is_planar_difference_set(elements, n: int) -> bool:
    """True iff the pairwise differences cover 1..n-1 exactly once."""
    elems = list(elements)
    if len(set(elems)) != len(elems):
        return False
    if len(elems) * (len(elems) - 1) != n - 1:
        return False
    seen = set()
    for a in elems:
        for b in elems:
            if a == b:
                continue
            d = (a - b) % n
            if d == 0 or d in seen:
                return False
            seen.add(d)
    return len(seen) == n - 1


def singer_difference_set(q: int) -> DifferenceSet:
    """Planar difference set mod q^2+q+1 from a Singer cycle of GF(q^3).

    Point i of the cyclic projective plane is the scalar class of xi^i for
    a primitive xi of GF(q^3); the set collects the indices lying on the
    trace-zero line.  The result is canonicalized to the lexicographically
    smallest translate so downstream constructions are reproducible.
    """
    make_field(q)  # surfaces NotPrimePower for bad q
    cube = make_field(q**3)
    n = q * q + q + 1
    xi = primitive_element(cube)
    raw = []
    y = 1
    for i in range(n):
        trace = field_add(
            cube,
            field_add(cube, y, field_pow(cube, y, q)),
            field_pow(cube, y, q * q),
        )
        if trace == 0:
            raw.append(i)
        y = field_mul(cube, y, xi)
    if len(raw) != q + 1:
        raise AssertionError(f"trace-zero line has {len(raw)} points, wanted {q + 1}")
    canonical = min(tuple(sorted((d + t) % n for d in raw)) for t in range(n))
    if not is_planar_difference_set(canonical, n):
        raise AssertionError("Singer construction produced an invalid difference set")
    return DifferenceSet(modulus=n, elements=canonical)
