"""Degree counts of the reduced bases and the combinatorics they generate.

The number of basis elements with m-free leading monomial in each degree is
an HF difference of the underlying complete intersection, stable once enough
variables are present.  Specializing the exponents turns these counts into
Catalan, Motzkin and Riordan convolutions, the (m-1)-Catalan triangle, and
spin degeneracies of decoherence-free states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import check_degree_vector
from .hilbert import (
    TypeInfo,
    hf,
    hs_complete_intersection,
    socle_degrees,
    truncate_lefschetz,
    type_classify,
)

__all__ = [
    "MSpec",
    "DegreeSequence",
    "CatalanTriangle",
    "TypeInfo",
    "type_classify",
    "gb_degree_sequence",
    "crit_level_count",
    "g3k_sequence",
    "n_of_degree",
    "max_gb_degree",
    "motzkin",
    "riordan",
    "catalan",
    "convolve",
    "convolution_check",
    "catalan_convolution_check_m2",
    "s_binom",
    "s_catalan_triangle",
    "log_concavity_check",
    "spin_catalan_degeneracy",
    "spin_path_count",
]


@dataclass(frozen=True)
class MSpec:
    """Exponent sequence: an explicit prefix, optionally continued by a
    constant tail.  Indexing past a finite prefix is an error rather than a
    silent extension."""

    prefix: tuple
    tail: int | None = None

    def __post_init__(self):
        if self.prefix:
            check_degree_vector(self.prefix)
        if self.tail is not None and self.tail < 2:
            raise ValueError("tail exponent must be at least 2")
        if not self.prefix and self.tail is None:
            raise ValueError("empty exponent specification")

    @classmethod
    def finite(cls, m) -> "MSpec":
        return cls(tuple(m))

    @classmethod
    def constant(cls, m: int) -> "MSpec":
        return cls((), m)

    @classmethod
    def coerce(cls, spec) -> "MSpec":
        if isinstance(spec, MSpec):
            return spec
        if isinstance(spec, int):
            return cls.constant(spec)
        return cls.finite(spec)

    def entry(self, i: int) -> int:
        """1-based exponent m_i."""
        if i < 1:
            raise ValueError("index must be positive")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        if self.tail is None:
            raise ValueError(
                f"exponent vector of length {len(self.prefix)} has no entry {i}"
            )
        return self.tail

    def truncation(self, n: int) -> tuple:
        return tuple(self.entry(i) for i in range(1, n + 1))


@dataclass(frozen=True)
class DegreeSequence:
    """Counts of m-free basis elements per degree, d running from k to the
    requested maximum."""

    m_spec: MSpec
    k: int
    values: tuple  # (d, count) pairs, consecutive degrees

    def __getitem__(self, d: int) -> int:
        lo = self.values[0][0] if self.values else None
        if lo is None or not lo <= d <= self.values[-1][0]:
            raise KeyError(f"degree {d} outside computed range")
        return self.values[d - lo][1]

    def as_dict(self) -> dict:
        return dict(self.values)


def _level_frame(prefix, m_n: int, k: int):
    """(d_min, e_max, delta, series) for the level after the prefix, or None
    when no m-free generator uses that variable."""
    D, delta = socle_degrees(prefix, k)
    s_n = k + D - 2 * delta
    if s_n >= m_n:
        return None
    e_max = min((m_n - 1 - s_n) // 2, delta)
    series = hs_complete_intersection(prefix) if prefix else (1,)
    return k + D - delta, e_max, delta, series


def _level_count(series, delta: int, e: int, k: int) -> int:
    # HF difference of the complete intersection; equals the quotient HF
    return max(0, hf(series, delta - e) - hf(series, delta - e - k))


def gb_degree_sequence(m_spec, k: int, d_max: int) -> DegreeSequence:
    """Counts per degree, summing level contributions until every later
    level is known to start beyond d_max.

    The minimal degree reachable after a prefix never decreases as the
    prefix grows, so the scan can stop at the first prefix whose bound
    clears d_max.  A finite prefix exhausted before that bound is an error.
    """
    spec = MSpec.coerce(m_spec)
    if k < 1:
        raise ValueError("power must be at least 1")
    counts = {d: 0 for d in range(k, d_max + 1)}
    n = 1
    while True:
        prefix = spec.truncation(n - 1)
        D, delta = socle_degrees(prefix, k)
        if k + D - delta > d_max:
            break
        try:
            m_n = spec.entry(n)
        except ValueError:
            raise ValueError(
                f"exponent prefix too short to settle degrees up to {d_max}"
            ) from None
        frame = _level_frame(prefix, m_n, k)
        if frame is not None:
            d_min, e_max, delta, series = frame
            for e in range(e_max + 1):
                d = d_min + e
                if k <= d <= d_max:
                    counts[d] += _level_count(series, delta, e, k)
        n += 1
    return DegreeSequence(spec, k, tuple(sorted(counts.items())))


def crit_level_count(n: int, m_spec, k: int) -> int:
    """Number of m-free basis elements whose leading monomial uses x_n."""
    spec = MSpec.coerce(m_spec)
    frame = _level_frame(spec.truncation(n - 1), spec.entry(n), k)
    if frame is None:
        return 0
    _, e_max, delta, series = frame
    return sum(_level_count(series, delta, e, k) for e in range(e_max + 1))


def g3k_sequence(k: int, n_max: int) -> tuple:
    """Cube-free element counts g(n), the level n + ceil(k/2) count."""
    shift = (k + 1) // 2
    return tuple(
        crit_level_count(n + shift, MSpec.constant(3), k) for n in range(n_max + 1)
    )


def n_of_degree(d: int, m_spec, k: int) -> int:
    """The unique variable count whose level contains degree d.

    Valid when every level that actually carries generators is balanced
    (type 1); an unbalanced nonempty level in the scan range is an error.
    """
    spec = MSpec.coerce(m_spec)
    if d < k:
        raise ValueError("degree below the minimum k")
    best = None
    nu = 1
    while True:
        prefix = spec.truncation(nu - 1)
        D, delta = socle_degrees(prefix, k)
        if (D + k) / 2 >= d:
            break
        nonempty = _level_frame(prefix, spec.entry(nu), k) is not None
        if nu > 1 and nonempty and not type_classify(prefix, k).type1:
            raise ValueError(
                f"level {nu} is unbalanced; use the full degree scan instead"
            )
        best = nu
        nu += 1
    if best is None:
        raise ValueError(f"no level reaches degree {d}")
    return best


def max_gb_degree(n: int, m, k: int) -> int:
    """Largest degree among basis elements with m-free leading monomial."""
    m = check_degree_vector(m)
    if len(m) != n:
        raise ValueError("degree vector length must equal n")
    for q in range(n, 0, -1):
        prefix = m[: q - 1]
        D, delta = socle_degrees(prefix, k)
        s_q = k + D - 2 * delta
        if s_q >= m[q - 1]:
            continue
        series = hs_complete_intersection(prefix) if prefix else (1,)
        if hf(series, delta) - hf(series, delta - k) <= 0:
            continue
        return k + D - delta + min((m[q - 1] - 1 - s_q) // 2, delta)
    raise ValueError(f"no m-free basis elements for n={n}, m={m}, k={k}")


# ---------------------------------------------------------------------------
# classical sequences and convolutions


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return 1
    return motzkin(n - 1) + sum(
        motzkin(j) * motzkin(n - 2 - j) for j in range(n - 1)
    )


@lru_cache(maxsize=None)
def riordan(n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return 1
    if n == 1:
        return 0
    return (n - 1) * (2 * riordan(n - 1) + 3 * riordan(n - 2)) // (n + 1)


def convolve(a, b) -> tuple:
    """Coefficients of the product of two power series prefixes."""
    length = min(len(a), len(b))
    return tuple(
        sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(length)
    )


def convolution_check(k: int, n_max: int) -> bool:
    """g(n) for cube exponents factors as Motzkin^q * Riordan^r, k = 2q + r."""
    if k < 1:
        raise ValueError("power must be at least 1")
    q, r = divmod(k, 2)
    target = (1,) + (0,) * n_max
    motzkin_row = tuple(motzkin(i) for i in range(n_max + 1))
    riordan_row = tuple(riordan(i) for i in range(n_max + 1))
    for _ in range(q):
        target = convolve(target, motzkin_row)
    for _ in range(r):
        target = convolve(target, riordan_row)
    seq = gb_degree_sequence(MSpec.constant(3), k, k + n_max)
    got = tuple(seq[k + i] for i in range(n_max + 1))
    return got == target


def catalan_convolution_check_m2(k: int, n_max: int) -> bool:
    """For square exponents, g(k + n) matches the k-th Catalan power series."""
    if k < 1:
        raise ValueError("power must be at least 1")
    target = (1,) + (0,) * n_max
    catalan_row = tuple(catalan(i) for i in range(n_max + 1))
    for _ in range(k):
        target = convolve(target, catalan_row)
    seq = gb_degree_sequence(MSpec.constant(2), k, k + n_max)
    got = tuple(seq[k + i] for i in range(n_max + 1))
    return got == target


# ---------------------------------------------------------------------------
# the (m-1)-Catalan triangle


@dataclass(frozen=True)
class CatalanTriangle:
    s: int
    rows: tuple  # row n holds columns 0 .. s*n

    def entry(self, n: int, k: int) -> int:
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0


def s_binom(n: int, d: int, s: int):
    """Coefficient of t^d in (1 + t + ... + t^s)^n."""
    if s < 1:
        raise ValueError("s must be positive")
    series = hs_complete_intersection((s + 1,) * n) if n else (1,)
    return hf(series, d)


def s_catalan_triangle(m: int, n_max: int) -> CatalanTriangle:
    """Rows of first differences of the degree-m complete intersection HF,
    read outward from the symmetric middle."""
    if m < 2:
        raise ValueError("exponent must be at least 2")
    s = m - 1
    rows = [(1,)]
    for n in range(1, n_max + 1):
        rows.append(
            tuple(
                s_binom(2 * n, s * n + k, s) - s_binom(2 * n, s * n + k + 1, s)
                for k in range(s * n + 1)
            )
        )
    return CatalanTriangle(s, tuple(rows))


def log_concavity_check(triangle: CatalanTriangle) -> bool:
    for row in triangle.rows:
        for i in range(1, len(row) - 1):
            if row[i] * row[i] < row[i - 1] * row[i + 1]:
                return False
    return True


# ---------------------------------------------------------------------------
# spin degeneracies


def _doubled_spin(sigma) -> int:
    two = Fraction(sigma) * 2
    if two.denominator != 1 or two < 1:
        raise ValueError("spin must be a positive half-integer")
    return int(two)


def spin_catalan_degeneracy(sigma, N: int) -> int:
    """Number of spin-0 states of N particles of the given spin.

    Zero when sigma*N is fractional; otherwise the count of basis elements
    of degree sigma*N + 1 for exponent 2*sigma + 1 and first power.
    """
    if N < 0:
        raise ValueError("particle count must be non-negative")
    two_sigma = _doubled_spin(sigma)
    if (two_sigma * N) % 2 == 1:
        return 0
    d = two_sigma * N // 2 + 1
    seq = gb_degree_sequence(MSpec.constant(two_sigma + 1), 1, d)
    return seq[d]


def spin_path_count(sigma, N: int) -> int:
    """Direct count of height walks: N steps of size at most sigma, staying
    at or above zero, each step also at least |height - sigma| away from
    zero, returning to zero.  Heights carried doubled so half-integer spins
    stay integral."""
    if N < 0:
        raise ValueError("particle count must be non-negative")
    two_sigma = _doubled_spin(sigma)
    counts = {0: 1}
    for _ in range(N):
        nxt: dict = {}
        for h, c in counts.items():
            for h2 in range(abs(h - two_sigma), h + two_sigma + 1, 2):
                nxt[h2] = nxt.get(h2, 0) + c
        counts = nxt
    return counts.get(0, 0)
