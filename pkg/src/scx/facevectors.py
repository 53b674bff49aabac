"""Face-count vectors (f, h, g), the Macaulay pseudopower and M-sequences.

Conventions: for a complex of dimension ``dim`` set d = dim + 1.  The
f-vector lists f_{-1}..f_{d-1}, the h-vector h_0..h_d is defined by

    sum_j h_j * t^(d-j)  =  sum_i f_{i-1} * (t-1)^(d-i),

and g_0 = 1, g_i = h_i - h_{i-1}.  The official g-vector stops at
floor(d/2); ``extended_g`` exposes the h-differences all the way up to d,
which several summation identities need.  Impure complexes are accepted
(with d = dim + 1) and flagged in the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import SimplicialComplex


@dataclass(frozen=True)
class FVector:
    entries: tuple  # entries[i] = f_{i-1}
    impure: bool = False

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k: int) -> int:
        """f_k, with k from -1 to d-1; zero outside that range."""
        i = k + 1
        if 0 <= i < len(self.entries):
            return self.entries[i]
        return 0


@dataclass(frozen=True)
class HVector:
    entries: tuple  # entries[j] = h_j, j = 0..d
    impure: bool = False

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.entries):
            return self.entries[j]
        return 0


@dataclass(frozen=True)
class GVector:
    entries: tuple  # entries[i] = g_i, i = 0..floor(d/2)
    d: int = 0
    impure: bool = False

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.entries):
            return self.entries[i]
        return 0


def f_vector(cx: SimplicialComplex) -> FVector:
    """Exact face counts from the closure."""
    entries = tuple(cx.n_faces(k) for k in range(-1, cx.dim + 1))
    return FVector(entries, impure=not cx.is_pure())


def h_from_f(f: FVector) -> HVector:
    d = f.d
    entries = tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i - 1] for i in range(j + 1))
        for j in range(d + 1)
    )
    return HVector(entries, impure=f.impure)


def f_from_h(h: HVector) -> FVector:
    d = h.d
    entries = tuple(
        sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1)
    )
    return FVector(entries, impure=h.impure)


def h_vector(cx: SimplicialComplex) -> HVector:
    return h_from_f(f_vector(cx))


def _g_direct(f: FVector, j: int) -> int:
    # alternating-binomial form of g_j straight from the f-vector
    d = f.d
    return sum((-1) ** (j - i) * comb(d + 1 - i, j - i) * f[i - 1] for i in range(j + 1))


def g_vector(cx: SimplicialComplex) -> GVector:
    """g_0..g_{floor(d/2)}; the h-difference and binomial routes must agree."""
    f = f_vector(cx)
    h = h_from_f(f)
    d = f.d
    entries = []
    for i in range(d // 2 + 1):
        gi = h[i] - h[i - 1] if i >= 1 else 1
        assert gi == _g_direct(f, i), "g-vector routes disagree"
        entries.append(gi)
    return GVector(tuple(entries), d=d, impure=f.impure)


def extended_g(cx: SimplicialComplex) -> tuple:
    """All h-differences (1, h_1-h_0, ..., h_d-h_{d-1})."""
    h = h_vector(cx)
    return (1,) + tuple(h[j] - h[j - 1] for j in range(1, h.d + 1))


def g1(cx: SimplicialComplex) -> int:
    return cx.n_faces(0) - (cx.dim + 2)


def g2(cx: SimplicialComplex) -> int:
    """g_2 = f_1 - d*f_0 + C(d+1, 2) with d = dim + 1."""
    d = cx.dim + 1
    return cx.n_faces(1) - d * cx.n_faces(0) + comb(d + 1, 2)


def g3(cx: SimplicialComplex) -> int:
    eg = extended_g(cx)
    return eg[3] if len(eg) > 3 else 0


def reduced_euler(cx: SimplicialComplex) -> int:
    """Alternating face-count sum: -f_{-1} + f_0 - f_1 + ..."""
    return -1 + sum((-1) ** k * cx.n_faces(k) for k in range(0, cx.dim + 1))


def link_g_sum(cx: SimplicialComplex, k: int) -> tuple:
    """Both sides of the link-sum identity for pure (d-1)-complexes:

    sum_v g_k(lk v)  vs  (k+1) g_{k+1} + (d+1-k) g_k,

    with g read as extended h-differences on both sides.
    """
    d = cx.dim + 1
    lhs = 0
    for v in sorted(cx.vertices):
        gl = extended_g(cx.link([v]))
        lhs += gl[k] if k < len(gl) else 0
    eg = extended_g(cx)
    gk = eg[k] if k < len(eg) else 0
    gk1 = eg[k + 1] if k + 1 < len(eg) else 0
    rhs = (k + 1) * gk1 + (d + 1 - k) * gk
    return lhs, rhs


def macaulay_pseudopower(a: int, i: int) -> int:
    """a^<i>: write a as a sum of binomials C(a_i,i) > C(a_{i-1},i-1) > ...
    greedily, bump every top and index by one, and re-sum."""
    if a < 0 or i < 1:
        raise ValueError("need a >= 0 and i >= 1")
    if a == 0:
        return 0
    rem, idx, total = a, i, 0
    while rem > 0 and idx >= 1:
        top = idx
        while comb(top + 1, idx) <= rem:
            top += 1
        total += comb(top + 1, idx + 1)
        rem -= comb(top, idx)
        idx -= 1
    return total


def is_m_sequence(seq) -> bool:
    """Whether seq = (a_0, a_1, ...) satisfies a_0 = 1, a_i >= 0 and
    a_{k+1} <= a_k^<k> for every k >= 1."""
    seq = tuple(seq)
    if not seq or seq[0] != 1:
        return False
    if any(x < 0 for x in seq):
        return False
    for k in range(1, len(seq) - 1):
        if seq[k + 1] > macaulay_pseudopower(seq[k], k):
            return False
    return True
