"""Reduced Groebner bases of (x_1^{m_1}, ..., x_n^{m_n}, (x_1+...+x_n)^k).

Each m-free minimal generator s of the initial ideal carries a basis element
g_s whose coefficients come in closed form: a sum over divisors of s with
factorial-ratio weights, or equivalently one explicit coefficient per tail
monomial.  A certificate construction multiplies a companion polynomial f_s
by ell^k inside a truncated polynomial ring and lands exactly on g_s, which
is how membership of g_s in the ideal is witnessed without any division.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    QQ,
    SparsePoly,
    TermOrder,
    binom,
    check_degree_vector,
    grevlex,
    is_m_free,
    linear_power,
    max_index,
    mono_degree,
    multinomial,
    normal_form_pure_powers,
)
from .initial_ideal import (
    MonomialIdeal,
    critical_sets,
    enumerate_m_free,
    minimal_generators,
    pure_power_removed,
)

LT = -1


def _check_generator_shape(s, j: int, m, k: int, n_total: int) -> None:
    if len(s) != n_total:
        raise ValueError("monomial length must equal the number of variables")
    if max_index(s) != j:
        raise ValueError(f"largest variable of {s} is not {j}")
    if not is_m_free(s, m):
        raise ValueError(f"{s} is not m-free")
    expected = 2 * mono_degree(s) - k - sum(m[: j - 1]) + (j - 1)
    if s[j - 1] != expected:
        raise ValueError(f"{s} is not critical: x_{j} exponent must be {expected}")


def build_gs_divisor_form(s, j: int, m, k: int, n_total: int) -> SparsePoly:
    """Basis element for s as a divisor sum.

    g_s = sum over s'' | s/x_j^{s_j} of
        lambda_{s''} * s'' * (x_j + ... + x_n)^{deg(s) - deg(s'')},
    with the expansion reduced modulo the pure powers x_j^{m_j}, ..., x_n^{m_n}.
    The weight multiplies s_i!/s''_i! * C(m_i - s''_i - 1, s_i - s''_i) over
    i < j with s_j!/(deg(s) - deg(s''))!.
    """
    m = check_degree_vector(m)
    _check_generator_shape(s, j, m, k, n_total)
    s = tuple(s)
    d = mono_degree(s)
    width = n_total - j + 1
    terms: dict = {}
    for sdd in itertools.product(*(range(si + 1) for si in s[: j - 1])):
        e = d - sum(sdd)
        num = factorial(s[j - 1])
        for i in range(j - 1):
            num *= (factorial(s[i]) // factorial(sdd[i])) * binom(
                m[i] - sdd[i] - 1, s[i] - sdd[i]
            )
        if num == 0:
            continue
        lam = Fraction(num, factorial(e))
        # expand (x_j + ... + x_n)^e, dropping monomials the pure powers kill
        for comp in _compositions_below(e, width, m[j - 1 :]):
            mono = sdd + comp
            c = terms.get(mono, Fraction(0)) + lam * multinomial(e, comp)
            terms[mono] = c
    return SparsePoly.from_terms(n_total, terms.items(), QQ)


def _compositions_below(total: int, parts: int, caps) -> list:
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for head in range(min(total, caps[0] - 1), -1, -1):
        for rest in _compositions_below(total - head, parts - 1, caps[1:]):
            out.append((head,) + rest)
    return out


def build_gs_tail_form(
    s, j: int, m, k: int, n_total: int, ideal: MonomialIdeal | None = None
) -> SparsePoly:
    """Basis element for s written as s plus one term per tail monomial.

    A tail monomial t is m-free of the same degree, smaller than s, outside
    the initial ideal, and bounded by s in every variable before x_j; its
    coefficient is the binomial product over those variables times the ratio
    of factorial products of the two exponent vectors.
    """
    m = check_degree_vector(m)
    _check_generator_shape(s, j, m, k, n_total)
    s = tuple(s)
    if ideal is None:
        ideal = minimal_generators(n_total, m, k)
    order = grevlex(n_total)
    s_fact = 1
    for si in s:
        s_fact *= factorial(si)
    terms: dict = {s: Fraction(1)}
    for t in enumerate_m_free(n_total, m, mono_degree(s)):
        if order.cmp(t, s) != LT:
            continue
        if any(t[i] > s[i] for i in range(j - 1)):
            continue
        if ideal.contains(t):
            continue
        num = s_fact
        for i in range(j - 1):
            num *= binom(m[i] - t[i] - 1, s[i] - t[i])
        den = 1
        for ti in t:
            den *= factorial(ti)
        terms[t] = Fraction(num, den)
    return SparsePoly.from_terms(n_total, terms.items(), QQ)


# ---------------------------------------------------------------------------
# membership certificates


@dataclass(frozen=True)
class Certificate:
    """Witness that g_s lies in the ideal.

    f_s lives in n variables where the last one stands for y; the identity
    g_s = f_s * ell^k holds modulo the pure powers of the first n - 1
    variables only, with ell = x_1 + ... + x_{n-1} + y.
    """

    s: tuple
    k: int
    u: tuple
    mu: tuple
    f_s: SparsePoly


def _certificate_frame(s, m, k: int):
    n = len(s)
    if len(m) != n:
        raise ValueError("degree vector length must match the monomial")
    if k < 1:
        raise ValueError("power must be at least 1")
    if s[n - 1] <= 0:
        raise ValueError("last variable must divide the monomial")
    m_x = tuple(m[: n - 1])
    expected = 2 * mono_degree(s) - k - sum(m_x) + (n - 1)
    if s[n - 1] != expected:
        raise ValueError(f"last exponent must be {expected}, got {s[n - 1]}")
    if any(s[i] > m_x[i] - 1 for i in range(n - 1)):
        raise ValueError("head of the monomial must divide x^(m-1)")
    return n, m_x


def _gs_in_y_frame(s, m_x, k: int) -> SparsePoly:
    # Divisor sum with a single stand-in variable y for the trailing block;
    # no reduction applies to y.
    n = len(s)
    d = mono_degree(s)
    terms: dict = {}
    for sdd in itertools.product(*(range(si + 1) for si in s[: n - 1])):
        e = d - sum(sdd)
        num = factorial(s[n - 1])
        for i in range(n - 1):
            num *= (factorial(s[i]) // factorial(sdd[i])) * binom(
                m_x[i] - sdd[i] - 1, s[i] - sdd[i]
            )
        if num:
            terms[sdd + (e,)] = Fraction(num, factorial(e))
    return SparsePoly.from_terms(n, terms.items(), QQ)


def build_certificate(s, m, k: int) -> Certificate:
    """Companion polynomial f_s with one term per divisor of the complement.

    u completes s' to the full staircase x_1^{m_1-1} ... x_{n-1}^{m_{n-1}-1};
    each divisor v of u contributes mu_v * v * ell^{deg(s) - deg(v) - k}.
    The exponent equals deg(u) - deg(v), so it is never negative once the
    degree condition on s holds.
    """
    s = tuple(s)
    n, m_x = _certificate_frame(s, m, k)
    d = mono_degree(s)
    u = tuple(m_x[i] - 1 - s[i] for i in range(n - 1))
    f = SparsePoly.zero(n, QQ)
    mu_pairs = []
    for v in itertools.product(*(range(ui + 1) for ui in u)):
        dv = sum(v)
        mu = Fraction(factorial(s[n - 1]), factorial(d - dv))
        if dv % 2:
            mu = -mu
        for i in range(n - 1):
            mu *= Fraction(factorial(s[i]), factorial(v[i])) * binom(
                m_x[i] - 1 - v[i], u[i] - v[i]
            )
        if mu == 0:
            continue
        mu_pairs.append((v, mu))
        f = f.add(linear_power(n, 1, d - dv - k, QQ).mul_term(v + (0,), mu))
    return Certificate(
        s=s,
        k=k,
        u=u,
        mu=tuple(sorted(mu_pairs)),
        f_s=normal_form_pure_powers(f, m_x),
    )


def verify_certificate(cert: Certificate, m) -> bool:
    """Check g_s == f_s * ell^k modulo the pure powers on x_1..x_{n-1}."""
    n, m_x = _certificate_frame(cert.s, m, cert.k)
    product = cert.f_s.mul(linear_power(n, 1, cert.k, QQ))
    return normal_form_pure_powers(product, m_x) == _gs_in_y_frame(
        cert.s, m_x, cert.k
    )


def counting_identity(p, q, r) -> bool:
    """Signed divisor sum against the product of complement binomials.

    With alpha = p + q taken exponentwise, checks
    sum over v | gcd(p, r) of (-1)^deg(v) prod C(r_i, v_i) C(alpha_i - v_i, p_i - v_i)
    equals prod C(alpha_i - r_i, p_i).
    """
    if not len(p) == len(q) == len(r):
        raise ValueError("exponent vectors must share one length")
    alpha = tuple(pi + qi for pi, qi in zip(p, q))
    if any(ri > ai for ri, ai in zip(r, alpha)):
        raise ValueError("third monomial must divide the product of the first two")
    lhs = 0
    for v in itertools.product(*(range(min(pi, ri) + 1) for pi, ri in zip(p, r))):
        prod = 1
        for vi, ri, ai, pi in zip(v, r, alpha, p):
            prod *= binom(ri, vi) * binom(ai - vi, pi - vi)
        lhs += -prod if sum(v) % 2 else prod
    rhs = 1
    for ri, ai, pi in zip(r, alpha, p):
        rhs *= binom(ai - ri, pi)
    return lhs == rhs


# ---------------------------------------------------------------------------
# assembled bases


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic elements whose leading monomials form the minimal
    generating antichain of the initial ideal, tails outside it."""

    n: int
    m: tuple
    k: int
    order: TermOrder
    elements: tuple

    def leading_monomials(self) -> tuple:
        return tuple(g.leading_term(self.order)[0] for g in self.elements)

    def fingerprint(self) -> frozenset:
        """Marked basis: each element together with its leading monomial.

        Two orders can share every polynomial yet mark different leading
        monomials; over m = (3, 3, 3), k = 1 the rankings that agree on the
        top variable produce the same four polynomials while their initial
        ideals differ, and they count as different bases.
        """
        return frozenset(
            (g.leading_term(self.order)[0], g.fingerprint()) for g in self.elements
        )


def sort_elements(elements: list, order: TermOrder) -> tuple:
    # ascending degree; within a degree the higher leading monomial first
    ranked = sorted(
        elements, key=lambda g: order.key(g.leading_term(order)[0]), reverse=True
    )
    return tuple(sorted(ranked, key=lambda g: g.degree()))


def reduced_gb(n: int, m, k: int, ranking=None, kind: str = "grevlex") -> GroebnerBasis:
    """Reduced Groebner basis for any graded order respecting the ranking.

    The basis depends only on the variable ranking, so the computation runs
    in a relabeled frame where the ranking is the identity, then maps the
    variables back.
    """
    m = check_degree_vector(m)
    if len(m) != n:
        raise ValueError("degree vector length must equal n")
    if ranking is None:
        ranking = tuple(range(1, n + 1))
    order = TermOrder(kind, tuple(ranking))
    m_perm = tuple(m[r - 1] for r in order.ranking)

    def back(mono):
        out = [0] * n
        for i, e in enumerate(mono):
            out[order.ranking[i] - 1] = e
        return tuple(out)

    elements = []
    for j in range(1, n + 1):
        if not pure_power_removed(m_perm, k, j):
            mono = tuple(m_perm[j - 1] if i == j - 1 else 0 for i in range(n))
            elements.append(SparsePoly.monomial(n, back(mono), QQ))
    crit = critical_sets(n, m_perm, k)
    for j in range(1, n + 1):
        for s in crit.by_index[j - 1]:
            g = build_gs_divisor_form(s, j, m_perm, k, n)
            elements.append(
                SparsePoly.from_terms(
                    n, ((back(mo), c) for mo, c in g.terms.items()), QQ
                )
            )
    return GroebnerBasis(n, m, k, order, sort_elements(elements, order))


def distinct_gb_census(n: int, m, k: int) -> int:
    """Number of distinct reduced bases over all variable rankings."""
    seen = set()
    for perm in itertools.permutations(range(1, n + 1)):
        seen.add(reduced_gb(n, m, k, ranking=perm).fingerprint())
    return len(seen)
