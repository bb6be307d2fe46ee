"""Exact sparse multivariate polynomial arithmetic.

Monomials are exponent tuples, polynomials are dicts mapping exponent tuples
to nonzero coefficients. Coefficients live either in Q (stdlib Fraction) or in
a prime field GF(p) (ints reduced mod p). Everything here is exact; floats
never appear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

Mono = tuple  # exponent tuple, one entry per variable

LT, EQ, GT = -1, 0, 1


@lru_cache(maxsize=None)
def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside the triangle."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(total: int, parts: Iterable[int]) -> int:
    """total! / prod(parts!) for a weak composition of total."""
    out = 1
    rest = total
    for c in parts:
        out *= math.comb(rest, c)
        rest -= c
    if rest != 0:
        raise ValueError("parts do not sum to total")
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# coefficient fields


class Rationals:
    """Exact rational coefficients."""

    p = None
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(a.denominator, a.numerator)

    def div(self, a, b):
        return a / b

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers mod a prime p, with Fermat inverses."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def coerce(self, value) -> int:
        p = self.p
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return value.numerator * pow(den, p - 2, p) % p
        return int(value) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = Rationals()

Field = Union[Rationals, PrimeField]


def field_for(p: int | None) -> Field:
    return QQ if p is None else PrimeField(p)


# ---------------------------------------------------------------------------
# monomial helpers


def mono_degree(mono: Mono) -> int:
    return sum(mono)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def max_index(mono: Mono) -> int:
    """Largest 1-based index of a variable dividing the monomial, 0 for 1."""
    for i in range(len(mono) - 1, -1, -1):
        if mono[i] > 0:
            return i + 1
    return 0


def is_m_free(mono: Mono, m: tuple) -> bool:
    """True when every exponent stays below the matching pure-power degree."""
    return all(e < mi for e, mi in zip(mono, m))


def unit_mono(n: int) -> Mono:
    return (0,) * n


def check_degree_vector(m: Iterable[int]) -> tuple:
    m = tuple(int(v) for v in m)
    if any(v < 2 for v in m):
        raise ValueError(f"degree vector entries must be >= 2, got {m}")
    return m


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """A graded monomial order plus a variable ranking.

    kind is "grevlex" or "grlex". ranking lists 1-based variable indices from
    highest to lowest; ties in degree are broken after permuting exponents
    into that frame. Both kinds are admissible: 1 is minimal and the order is
    compatible with multiplication.
    """

    kind: str
    ranking: tuple

    def __post_init__(self):
        if self.kind not in ("grevlex", "grlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.ranking) != list(range(1, len(self.ranking) + 1)):
            raise ValueError(f"ranking must permute 1..n, got {self.ranking}")

    @property
    def n(self) -> int:
        return len(self.ranking)

    def permute(self, mono: Mono) -> Mono:
        return tuple(mono[i - 1] for i in self.ranking)

    def key(self, mono: Mono):
        """Sort key: key(a) < key(b) iff a comes before b in the order."""
        perm = self.permute(mono)
        if self.kind == "grevlex":
            return (sum(perm), tuple(-e for e in reversed(perm)))
        return (sum(perm), perm)

    def cmp(self, a: Mono, b: Mono) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ


def grevlex(n: int) -> TermOrder:
    return TermOrder("grevlex", tuple(range(1, n + 1)))


def grlex(n: int) -> TermOrder:
    return TermOrder("grlex", tuple(range(1, n + 1)))


# ---------------------------------------------------------------------------
# sparse polynomials


class SparsePoly:
    """Immutable-by-convention sparse polynomial over a coefficient field."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field, terms: dict | None = None):
        self.n = n
        self.field = field
        self.terms = {} if terms is None else terms

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> "SparsePoly":
        return cls(n, field, {})

    @classmethod
    def from_terms(cls, n: int, items, field: Field = QQ) -> "SparsePoly":
        """Build from (mono, coeff) pairs, merging duplicates, dropping zeros."""
        terms: dict = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} has wrong length for n={n}")
            c = field.coerce(c)
            acc = field.add(terms.get(mono, field.zero), c)
            if acc == field.zero:
                terms.pop(mono, None)
            else:
                terms[mono] = acc
        return cls(n, field, terms)

    @classmethod
    def monomial(cls, n: int, mono: Mono, field: Field = QQ, coeff=1) -> "SparsePoly":
        return cls.from_terms(n, [(mono, coeff)], field)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mono: Mono):
        return self.terms.get(tuple(mono), self.field.zero)

    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_term(self, order: TermOrder):
        """(monomial, coefficient) maximal under the order; None if zero."""
        if not self.terms:
            return None
        lm = max(self.terms, key=order.key)
        return lm, self.terms[lm]

    def add(self, other: "SparsePoly") -> "SparsePoly":
        f = self.field
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            acc = f.add(terms.get(mono, f.zero), c)
            if acc == f.zero:
                terms.pop(mono, None)
            else:
                terms[mono] = acc
        return SparsePoly(self.n, f, terms)

    def neg(self) -> "SparsePoly":
        f = self.field
        return SparsePoly(self.n, f, {m: f.neg(c) for m, c in self.terms.items()})

    def sub(self, other: "SparsePoly") -> "SparsePoly":
        return self.add(other.neg())

    def scale(self, c) -> "SparsePoly":
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return SparsePoly.zero(self.n, f)
        return SparsePoly(self.n, f, {m: f.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono: Mono, c) -> "SparsePoly":
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return SparsePoly.zero(self.n, f)
        return SparsePoly(
            self.n, f, {mono_mul(m, mono): f.mul(v, c) for m, v in self.terms.items()}
        )

    def mul(self, other: "SparsePoly") -> "SparsePoly":
        f = self.field
        terms: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = mono_mul(ma, mb)
                acc = f.add(terms.get(mono, f.zero), f.mul(ca, cb))
                if acc == f.zero:
                    terms.pop(mono, None)
                else:
                    terms[mono] = acc
        return SparsePoly(self.n, f, terms)

    def monic(self, order: TermOrder) -> "SparsePoly":
        """Scale so the leading coefficient is 1 (both coefficient modes)."""
        lt = self.leading_term(order)
        if lt is None:
            return self
        return self.scale(self.field.inv(lt[1]))

    def fingerprint(self):
        """Hashable canonical form: sorted (mono, coeff) pairs."""
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.n == other.n
            and self.field.p == other.field.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.field.p, self.fingerprint()))

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        body = poly_to_text(self, grevlex(self.n))
        return f"SparsePoly({body})"


def variable(n: int, i: int, field: Field = QQ) -> SparsePoly:
    """x_i as a polynomial in n variables (1-based i)."""
    mono = tuple(1 if j == i - 1 else 0 for j in range(n))
    return SparsePoly.monomial(n, mono, field)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """All weak compositions of total into the given number of parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def linear_power(n: int, lo: int, e: int, field: Field = QQ) -> SparsePoly:
    """(x_lo + x_{lo+1} + ... + x_n)**e expanded with multinomials."""
    width = n - lo + 1
    if width <= 0:
        raise ValueError("empty variable range")
    # from_terms drops multinomials that vanish in the field, which happens
    # for primes not exceeding e
    return SparsePoly.from_terms(
        n,
        (
            ((0,) * (lo - 1) + comp, multinomial(e, comp))
            for comp in compositions(e, width)
        ),
        field,
    )


def expand_last_variable(f: SparsePoly, n_total: int) -> SparsePoly:
    """Substitute the last variable of f by x_j + ... + x_{n_total}, j = f.n.

    Embeds a polynomial written with a stand-in final variable into a larger
    ring where that variable means the sum of the trailing variables.
    """
    j = f.n
    if n_total < j:
        raise ValueError("target ring has too few variables")
    field = f.field
    out = SparsePoly.zero(n_total, field)
    for mono, c in f.terms.items():
        head = mono[: j - 1] + (0,) * (n_total - j + 1)
        part = SparsePoly.monomial(n_total, head, field, c)
        e = mono[j - 1]
        if e:
            part = part.mul(linear_power(n_total, j, e, field))
        out = out.add(part)
    return out


def normal_form_pure_powers(f: SparsePoly, m: tuple, from_index: int = 1) -> SparsePoly:
    """Drop every term divisible by x_i^{m_i} for i >= from_index (1-based)."""
    terms = {
        mono: c
        for mono, c in f.terms.items()
        if all(mono[i] < m[i] for i in range(from_index - 1, len(m)))
    }
    return SparsePoly(f.n, f.field, terms)


def reduce_full(f: SparsePoly, reducers: list, order: TermOrder) -> SparsePoly:
    """Full normal form of f modulo a list of polynomials.

    Every term of the result is divisible by no leading monomial of the
    reducers, so reducing a second time is the identity.
    """
    field = f.field
    lead = []
    for g in reducers:
        lt = g.leading_term(order)
        if lt is not None:
            lead.append((lt[0], lt[1], g))
    work = dict(f.terms)
    remainder: dict = {}
    key = order.key
    while work:
        mono = max(work, key=key)
        c = work.pop(mono)
        hit = None
        for lm, lc, g in lead:
            if mono_divides(lm, mono):
                hit = (lm, lc, g)
                break
        if hit is None:
            remainder[mono] = c
            continue
        lm, lc, g = hit
        q = mono_div(mono, lm)
        factor = field.div(c, lc)
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            t = mono_mul(q, gm)
            acc = field.sub(work.get(t, field.zero), field.mul(factor, gc))
            if acc == field.zero:
                work.pop(t, None)
            else:
                work[t] = acc
    return SparsePoly(f.n, field, remainder)


def clear_denominators(f: SparsePoly) -> SparsePoly:
    """Primitive integer form: scale by the denominator lcm, divide out the
    content, keep the sign of the grevlex leading coefficient positive."""
    if f.field.p is not None:
        raise ValueError("clear_denominators expects rational coefficients")
    if f.is_zero():
        return f
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {m: c.numerator * (den // c.denominator) for m, c in f.terms.items()}
    content = 0
    for v in ints.values():
        content = math.gcd(content, v)
    lm = max(ints, key=grevlex(f.n).key)
    sign = -1 if ints[lm] < 0 else 1
    return SparsePoly(
        f.n, f.field, {m: Fraction(v // (sign * content)) for m, v in ints.items()}
    )


# ---------------------------------------------------------------------------
# serialization


def coeff_to_str(c) -> str:
    return str(c)


def coeff_from_str(s: str, field: Field):
    return field.coerce(Fraction(s))


def mono_to_text(mono: Mono) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def poly_to_text(f: SparsePoly, order: TermOrder) -> str:
    """Human-readable infix form, terms sorted descending in the order."""
    if f.is_zero():
        return "0"
    monos = sorted(f.terms, key=order.key, reverse=True)
    pieces = []
    for i, mono in enumerate(monos):
        c = f.terms[mono]
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        mtxt = mono_to_text(mono)
        if mtxt == "1":
            body = coeff_to_str(mag)
        elif mag == 1:
            body = mtxt
        else:
            body = f"{coeff_to_str(mag)}*{mtxt}"
        if i == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


def poly_to_json(f: SparsePoly, order: TermOrder) -> dict:
    monos = sorted(f.terms, key=order.key, reverse=True)
    return {
        "n": f.n,
        "terms": [
            {"exps": list(m), "coeff": coeff_to_str(f.terms[m])} for m in monos
        ],
    }


def poly_from_json(data: dict, field: Field = QQ) -> SparsePoly:
    n = data["n"]
    return SparsePoly.from_terms(
        n,
        [(tuple(t["exps"]), coeff_from_str(t["coeff"], field)) for t in data["terms"]],
        field,
    )
