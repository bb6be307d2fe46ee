"""Monomial ideals attached to power-sum almost complete intersections.

The initial ideal of (x_1^{m_1}, ..., x_n^{m_n}, (x_1+...+x_n)^k) under any
order ranking x_1 > ... > x_n is generated by the surviving pure powers plus
the critical monomials, grouped by their largest variable. Three independent
constructions are provided: a level recursion (the production route), the
direct degree-equation formula, and a brute-force lattice-path enumerator;
tests keep all three in agreement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    check_degree_vector,
    grevlex,
    is_m_free,
    max_index,
    mono_divides,
)
from . import paths as _paths

Mono = tuple


def enumerate_m_free(n: int, m, d: int) -> list:
    """All m-free monomials of total degree d, sorted descending in grevlex."""
    m = check_degree_vector(m) if n else tuple(m)
    if len(m) != n:
        raise ValueError("degree vector length must equal n")
    out: list = []

    def rec(i: int, remaining: int, prefix: tuple):
        if i == n:
            if remaining == 0:
                out.append(prefix)
            return
        tail_cap = sum(mi - 1 for mi in m[i + 1 :])
        for e in range(min(remaining, m[i] - 1), -1, -1):
            if remaining - e <= tail_cap:
                rec(i + 1, remaining - e, prefix + (e,))

    if d >= 0:
        rec(0, d, ())
    key = grevlex(n).key if n else (lambda mono: 0)
    return sorted(out, key=key, reverse=True)


def minimalize_monomials(gens) -> tuple:
    """Antichain of the divisibility-minimal elements, sorted descending."""
    gens = set(gens)
    keep = []
    for g in gens:
        if not any(h != g and mono_divides(h, g) for h in gens):
            keep.append(g)
    n = len(keep[0]) if keep else 0
    return tuple(sorted(keep, key=grevlex(n).key, reverse=True)) if keep else ()


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal carried by its minimal generators (an antichain)."""

    n: int
    min_gens: tuple

    def __post_init__(self):
        for g in self.min_gens:
            if len(g) != self.n:
                raise ValueError("generator arity mismatch")
        for g in self.min_gens:
            for h in self.min_gens:
                if g != h and mono_divides(g, h):
                    raise ValueError("generators are not an antichain")

    @classmethod
    def from_generators(cls, n: int, gens) -> "MonomialIdeal":
        return cls(n, minimalize_monomials(gens))

    def contains(self, mono) -> bool:
        mono = tuple(mono)
        return any(mono_divides(g, mono) for g in self.min_gens)


@dataclass(frozen=True)
class CriticalSets:
    """Critical monomials grouped by largest variable index (1-based)."""

    n: int
    m: tuple
    k: int
    by_index: tuple  # n entries, each a sorted tuple of n-variable monomials

    def union(self) -> tuple:
        out = [s for group in self.by_index for s in group]
        return tuple(sorted(out, key=grevlex(self.n).key, reverse=True))


def pure_power_removed(m, k: int, j: int) -> bool:
    """x_j^{m_j} drops out of the minimal generators iff k + D_{j-1} < m_j."""
    return k + sum(mi - 1 for mi in m[: j - 1]) < m[j - 1]


def critical_sets(n: int, m, k: int) -> CriticalSets:
    """Level recursion: a critical monomial with largest variable j is w*x_j^e
    where w avoids the level j-1 ideal and e = k + D_{j-1} - 2*deg(w)."""
    m = check_degree_vector(m)
    if len(m) != n:
        raise ValueError("degree vector length must equal n")
    if k < 1:
        raise ValueError("power must be at least 1")
    by_index = []
    gens: list = []  # minimal generators at the current prefix length
    d_prev = 0
    for j in range(1, n + 1):
        mj = m[j - 1]
        crit_j = []
        # exponent window 1 <= e <= m_j - 1 pins deg(w) to a short range
        lo = max(0, -(-(k + d_prev - mj + 1) // 2))
        hi = (k + d_prev - 1) // 2
        for dw in range(lo, hi + 1):
            e = k + d_prev - 2 * dw
            for w in enumerate_m_free(j - 1, m[: j - 1], dw):
                if not any(mono_divides(g, w) for g in gens):
                    crit_j.append(w + (e,))
        gens = [g + (0,) for g in gens]
        gens.append((0,) * (j - 1) + (mj,))
        gens.extend(crit_j)
        gens = list(minimalize_monomials(gens))
        pad = n - j
        by_index.append(
            tuple(
                sorted(
                    (s + (0,) * pad for s in crit_j),
                    key=grevlex(n).key,
                    reverse=True,
                )
            )
        )
        d_prev += mj - 1
    return CriticalSets(n, m, k, tuple(by_index))


def minimal_generators(n: int, m, k: int) -> MonomialIdeal:
    """Kept pure powers plus critical monomials, as a minimal antichain."""
    crit = critical_sets(n, m, k)
    gens = [s for group in crit.by_index for s in group]
    for j in range(1, n + 1):
        if not pure_power_removed(m, k, j):
            gens.append(tuple(m[j - 1] if i == j - 1 else 0 for i in range(n)))
    ideal = MonomialIdeal.from_generators(n, gens)
    # the union is itself minimal; losing a member means a construction bug
    if len(ideal.min_gens) != len(gens):
        raise RuntimeError(f"generator union not minimal for n={n} m={m} k={k}")
    return ideal


# ---------------------------------------------------------------------------
# independent routes used for cross-checking


def _bar_condition(s, m, k: int, ell: int) -> bool:
    """Membership test for the unintersected level-ell set: x_ell | s and the
    ell-th exponent matches 2*deg(s_{<=ell}) - k - sum_{i<ell} m_i + (ell-1)."""
    if s[ell - 1] == 0:
        return False
    dg = sum(s[:ell])
    return s[ell - 1] == 2 * dg - k - sum(m[: ell - 1]) + (ell - 1)


def critical_sets_formula(n: int, m, k: int) -> CriticalSets:
    """Arithmetic route: divisibility-minimal monomials satisfying the degree
    equation at their own top index.

    Every monomial satisfying the equation lies in the ideal, and every
    minimal generator satisfies it, so the minimal elements are exactly the
    m-free minimal generators.  Dropping only those with an earlier index
    satisfying its own equation is not enough: over m = (3, 3, 2), k = 1 the
    monomial x1^2*x3 passes that filter yet is divisible by the level-one
    generator x1.
    """
    m = check_degree_vector(m)
    total = sum(mi - 1 for mi in m)
    satisfiers = [
        s
        for d in range(1, total + 1)
        for s in enumerate_m_free(n, m, d)
        if max_index(s) > 0 and _bar_condition(s, m, k, max_index(s))
    ]
    by_index: list = [[] for _ in range(n)]
    for s in minimalize_monomials(satisfiers):
        by_index[max_index(s) - 1].append(s)
    return CriticalSets(
        n,
        m,
        k,
        tuple(
            tuple(sorted(g, key=grevlex(n).key, reverse=True)) for g in by_index
        ),
    )


def _pivot_slope(heights, line, i: int) -> int:
    # Slope of the edge from vertex i - 1 into the reflection of vertex i.
    return line.y2[i] - heights[i] - heights[i - 1]


def critical_sets_paths(n: int, m, k: int) -> CriticalSets:
    """Geometric route: the reflected edge into the last used variable drops
    as steeply as admissibility allows, and no earlier vertex reflects to an
    admissible edge at all.

    The steepest-drop contact at the top index restates the degree equation.
    An admissible (not necessarily extremal) reflected edge at an earlier
    vertex makes the prefix path critical, so its monomial lies in a prefix
    ideal and divides this one away from minimality.  Criticality of the full
    path alone is too weak in both directions: x1^2 over m = (3,), k = 1 is
    critical yet a multiple of x1.
    """
    m = check_degree_vector(m)
    line = _paths.ReflectionLine.build(n, m, k)
    by_index: list = [[] for _ in range(n)]
    total = sum(mi - 1 for mi in m)
    for d in range(1, total + 1):
        for s in enumerate_m_free(n, m, d):
            j = max_index(s)
            if j == 0:
                continue
            heights = _paths.path_from_monomial(s)
            if _pivot_slope(heights, line, j) != 2 - m[j - 1]:
                continue
            if any(
                2 - m[i - 1] <= _pivot_slope(heights, line, i) <= 1
                for i in range(1, j)
            ):
                continue
            by_index[j - 1].append(s)
    return CriticalSets(
        n,
        m,
        k,
        tuple(
            tuple(sorted(g, key=grevlex(n).key, reverse=True)) for g in by_index
        ),
    )


# ---------------------------------------------------------------------------
# quotient counting and structure checks


def hf_quotient(n: int, m, k: int, d: int, ideal: MonomialIdeal | None = None) -> int:
    """Number of m-free degree-d monomials outside the ideal."""
    if ideal is None:
        ideal = minimal_generators(n, m, k)
    return sum(1 for s in enumerate_m_free(n, m, d) if not ideal.contains(s))


def check_strongly_m_stable(n: int, m, k: int, ideal: MonomialIdeal | None = None) -> bool:
    """Swapping one variable of an m-free generator for an earlier variable
    stays inside the ideal whenever the swap keeps the monomial m-free."""
    if ideal is None:
        ideal = minimal_generators(n, m, k)
    for v in ideal.min_gens:
        if not is_m_free(v, m):
            continue
        for j in range(1, n + 1):
            if v[j - 1] == 0:
                continue
            for i in range(1, j):
                u = list(v)
                u[j - 1] -= 1
                u[i - 1] += 1
                if is_m_free(u, m) and not ideal.contains(tuple(u)):
                    return False
    return True


def check_revlex_segment(n: int, m, k: int, ideal: MonomialIdeal | None = None) -> bool:
    """Every monomial of the same degree lying revlex-above an m-free minimal
    generator belongs to the ideal."""
    if ideal is None:
        ideal = minimal_generators(n, m, k)
    order = grevlex(n)
    for s in ideal.min_gens:
        if not is_m_free(s, m):
            continue
        d = sum(s)
        for t in _all_monomials(n, d):
            if order.cmp(t, s) == 1 and not ideal.contains(t):
                return False
    return True


def _all_monomials(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for e in range(d + 1):
        for rest in _all_monomials(n - 1, d - e):
            yield (e,) + rest
