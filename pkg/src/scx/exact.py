"""Exact linear algebra over the rationals and prime fields.

Everything here works on small dense matrices given as lists of rows of
Python ints (or Fractions for the kernel routines).  No floating point is
used anywhere; rank decisions are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError

#: Mersenne prime used as the default modulus for fast exact ranks.
DEFAULT_PRIME = 2**61 - 1


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers all usable moduli)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_field(field) -> object:
    """Normalize a field spec: "rational" or a prime modulus."""
    if field == "rational":
        return field
    if isinstance(field, int):
        if not is_probable_prime(field):
            raise PreconditionError(f"{field} is not prime")
        return field
    raise PreconditionError(f"unsupported field spec {field!r}")


def rank_rational(rows) -> int:
    """Rank over Q of an integer matrix via Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for i in range(rank + 1, nrows):
            fac = m[i][col]
            if fac == 0 and lead == prev:
                continue
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * lead - fac * row_r[j]) // prev
            row_i[col] = 0
        prev = lead
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod(rows, p: int) -> int:
    """Rank over GF(p) by ordinary Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row_r = m[rank]
        for j in range(col, ncols):
            row_r[j] = row_r[j] * inv % p
        for i in range(rank + 1, nrows):
            fac = m[i][col]
            if fac:
                row_i = m[i]
                for j in range(col, ncols):
                    row_i[j] = (row_i[j] - fac * row_r[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(rows, field="rational") -> int:
    field = validate_field(field)
    if field == "rational":
        return rank_rational(rows)
    return rank_mod(rows, field)


def right_nullspace(rows) -> list:
    """Basis of {x : A x = 0} over Q for an integer/Fraction matrix A.

    Returns primitive integer vectors (content 1, first nonzero entry
    positive), one per free column of the reduced echelon form, in
    free-column order; deterministic for a fixed input.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                fac = m[i][col]
                m[i] = [a - fac * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(_primitive(vec))
    return basis


def left_nullspace(rows) -> list:
    """Basis of {w : w A = 0}; the left kernel of A."""
    if not rows:
        return []
    transpose = [list(col) for col in zip(*rows)]
    return right_nullspace(transpose)


def _primitive(vec):
    from math import gcd

    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
