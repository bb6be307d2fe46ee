"""Independent Buchberger engine and modular rank computations.

Nothing here knows about lattice paths or closed-form coefficients: bases
are computed from the raw generators by S-polynomial reduction, so agreement
with the constructive modules is a genuine cross-check rather than a
tautology.  Works over the rationals or a prime field, with an optional
degree cap that is sound for homogeneous inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    QQ,
    Field,
    SparsePoly,
    TermOrder,
    check_degree_vector,
    compositions,
    field_for,
    grevlex,
    linear_power,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    multinomial,
    reduce_full,
)
from .closed_form import GroebnerBasis, sort_elements
from .initial_ideal import (
    MonomialIdeal,
    enumerate_m_free,
    minimalize_monomials,
)


@dataclass(frozen=True)
class OracleConfig:
    order: TermOrder
    p: int | None = None
    degree_cap: int | None = None

    @property
    def field(self) -> Field:
        return field_for(self.p)


def power_sum_generators(n: int, m, k: int, field: Field = QQ) -> list:
    """The defining generators: each pure power and the k-th power of the
    sum of all variables."""
    m = check_degree_vector(m)
    if len(m) != n:
        raise ValueError("degree vector length must equal n")
    if k < 1:
        raise ValueError("power must be at least 1")
    gens = []
    for i in range(n):
        mono = tuple(m[i] if t == i else 0 for t in range(n))
        gens.append(SparsePoly.monomial(n, mono, field))
    gens.append(linear_power(n, 1, k, field))
    return gens


def spoly(f: SparsePoly, g: SparsePoly, order: TermOrder) -> SparsePoly:
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    field = f.field
    left = f.mul_term(mono_div(lcm, mf), field.inv(cf))
    right = g.mul_term(mono_div(lcm, mg), field.inv(cg))
    return left.sub(right)


def _interreduce(basis: list, order: TermOrder) -> list:
    # minimality first: drop any element whose leading monomial another divides
    basis = sorted(basis, key=lambda g: order.key(g.leading_term(order)[0]))
    kept: list = []
    for g in basis:
        lm = g.leading_term(order)[0]
        if not any(mono_divides(h.leading_term(order)[0], lm) for h in kept):
            kept.append(g)
    # then push every tail outside the span of the leading monomials
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(kept):
            rest = kept[:i] + kept[i + 1 :]
            h = reduce_full(g, rest, order)
            if h != g:
                kept[i] = h
                changed = True
    return [g.monic(order) for g in kept]


def buchberger(gens: list, cfg: OracleConfig) -> tuple:
    """Reduced Groebner basis of the ideal the generators span.

    Normal selection strategy (smallest lcm in the order) with the coprimality
    and chain criteria.  A degree cap discards pairs above the cap, which
    loses nothing below it when all inputs are homogeneous.
    """
    order = cfg.order
    basis = [g for g in gens if not g.is_zero()]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    def lead(i):
        return basis[i].leading_term(order)[0]

    while pairs:
        best = min(
            pairs, key=lambda ij: order.key(mono_lcm(lead(ij[0]), lead(ij[1])))
        )
        pairs.discard(best)
        i, j = best
        lcm = mono_lcm(lead(i), lead(j))
        if cfg.degree_cap is not None and mono_degree(lcm) > cfg.degree_cap:
            continue
        if lcm == mono_mul(lead(i), lead(j)):
            continue
        if any(
            t != i
            and t != j
            and mono_divides(lead(t), lcm)
            and tuple(sorted((i, t)))[::-1] not in pairs
            and tuple(sorted((j, t)))[::-1] not in pairs
            for t in range(len(basis))
        ):
            continue
        h = reduce_full(spoly(basis[i], basis[j], order), basis, order)
        if not h.is_zero():
            basis.append(h)
            t = len(basis) - 1
            pairs.update((t, s) for s in range(t))
    return tuple(_interreduce(basis, order))


def oracle_reduced_gb(n: int, m, k: int, cfg: OracleConfig | None = None) -> GroebnerBasis:
    """Reduced basis of the power-sum ideal straight from the algorithm."""
    if cfg is None:
        cfg = OracleConfig(order=grevlex(n))
    gens = power_sum_generators(n, m, k, cfg.field)
    elements = buchberger(gens, cfg)
    return GroebnerBasis(n, tuple(m), k, cfg.order, sort_elements(list(elements), cfg.order))


def verify_is_gb(candidate, gens: list, cfg: OracleConfig) -> bool:
    """Buchberger criterion plus two-sided ideal containment.

    True iff every S-polynomial of the candidate reduces to zero against it,
    every original generator reduces to zero, and each candidate element
    reduces to zero against an independently computed basis of (gens).
    """
    order = cfg.order
    elements = list(getattr(candidate, "elements", candidate))
    if not elements:
        return all(g.is_zero() for g in gens)
    for f, g in itertools.combinations(elements, 2):
        if not reduce_full(spoly(f, g, order), elements, order).is_zero():
            return False
    for g in gens:
        if not reduce_full(g, elements, order).is_zero():
            return False
    reference = buchberger(gens, cfg)
    return all(
        reduce_full(f, list(reference), order).is_zero() for f in elements
    )


def initial_ideal_oracle(n: int, m, k: int, cfg: OracleConfig | None = None) -> MonomialIdeal:
    gb = oracle_reduced_gb(n, m, k, cfg)
    lms = [g.leading_term(gb.order)[0] for g in gb.elements]
    return MonomialIdeal(n, tuple(minimalize_monomials(lms)))


# ---------------------------------------------------------------------------
# modular rank of multiplication maps


def gaussian_rank(rows: list, p: int) -> int:
    """Rank of an integer matrix over F_p by elimination."""
    field = field_for(p)
    rows = [[field.coerce(x) for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def multiplication_rank(n: int, m, p: int, d: int, e: int = 1) -> int:
    """Rank over F_p of multiplying degree-d classes of the pure-power
    quotient by (x_1 + ... + x_n)^e."""
    m = check_degree_vector(m)
    field_for(p)
    source = enumerate_m_free(n, m, d)
    target = enumerate_m_free(n, m, d + e)
    if not source or not target:
        return 0
    col = {mono: idx for idx, mono in enumerate(target)}
    rows = []
    for u in source:
        row = [0] * len(target)
        for comp in compositions(e, n):
            v = mono_mul(u, comp)
            idx = col.get(v)
            if idx is not None:
                row[idx] = (row[idx] + multinomial(e, comp)) % p
        rows.append(row)
    return gaussian_rank(rows, p)
