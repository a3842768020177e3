"""Rational and truncated-series realizations of the algebra maps.

Three coordinate systems appear here:

* Laurent polynomials in q[1..n] (`QPoly`), with formal fractions over
  products of the binomials q[j] - q[i] (`QRatFrac`).  The substitution

      a_image_rat:  x[i,j]  ->  -(q[i]*q[j] + b*q[j] + a) / (q[j] - q[i])

  is a ring homomorphism that kills every defining relation, checked by
  `verify_a_kills_j`.  Fractions are never reduced; equality goes through
  cross multiplication, so every comparison is exact.

* Truncated Laurent series (`QTruncSeries`): terms are kept while their
  negative mass (sum of the negated negative exponents) is at most the
  truncation order W.  For an S-friendly monomial (every variable x[i,j]
  has i in S, j not in S) the expansion

      a_s_expand:  x[i,j]  ->  sum_k ( -q[i]^(k+1)*q[j]^-k
                                       - b*q[i]^k*q[j]^-k
                                       - a*q[i]^k*q[j]^-(k+1) ),  k <= W

  is exact for every retained exponent: positions in S only ever receive
  nonnegative exponents and positions outside S nonpositive ones, so
  negative masses add across factors and nothing pruned can come back.

* Power series in w with t-polynomial coefficients (`TWSeries`).
  `b_map` sends a q-exponent vector to the t-monomial of its positive
  part times w^(negative mass); `e_image` substitutes

      t[i]  ->  -(t[i] + b + a*w) * (1 + t[i]*w + t[i]^2*w^2 + ...)

  truncated at order W.  `verify_ed_eq_ba` checks, per pathless monomial,
  that the two routes into w-series agree; `verify_e_left_inverse` checks
  that taking the w-constant term of e_image and substituting
  t[i] -> -t[i] - b recovers the input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .poly import (
    Monomial,
    TPoly,
    XPoly,
    ambient_size,
    d_image,
    format_monomial,
    is_pathless,
    mono_pairs,
    render_terms,
)
from .groebner import ideal_generator
from .ring import ALPHA, BETA, Coeff, RationalLike, resolve_param


def neg_mass(exponents: tuple) -> int:
    """Sum of -e over the negative entries of a q-exponent vector."""
    return sum(-e for e in exponents if e < 0)


def q_to_r_exponent(a: tuple) -> tuple:
    """Coordinates q[i] = r[i]*...*r[n] turn q-exponents into prefix sums."""
    out = []
    total = 0
    for e in a:
        total += e
        out.append(total)
    return tuple(out)


def r_to_q_exponent(c: tuple) -> tuple:
    """Inverse of q_to_r_exponent: first differences."""
    out = []
    previous = 0
    for e in c:
        out.append(e - previous)
        previous = e
    return tuple(out)


def _mono_factors_q(exponents: tuple) -> list:
    out = []
    for pos, e in enumerate(exponents):
        if e:
            out.append(f"q[{pos + 1}]" if e == 1 else f"q[{pos + 1}]^{e}")
    return out


class QPoly:
    """Laurent polynomial in q[1..n]; exponents may be negative."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        cleaned = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent tuple {exps} does not match n={n}")
                if coeff:
                    cleaned[exps] = coeff
        self.n = n
        self.terms = cleaned

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "QPoly":
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "QPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "QPoly":
        return cls.constant(n, Coeff.one())

    @classmethod
    def constant(cls, n: int, coeff: Coeff) -> "QPoly":
        if not coeff:
            return cls.zero(n)
        return cls._raw(n, {(0,) * n: coeff})

    @classmethod
    def term(cls, n: int, exponents: tuple, coeff: Coeff) -> "QPoly":
        return cls(n, {tuple(exponents): coeff})

    def _check_ambient(self, other: "QPoly"):
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __neg__(self) -> "QPoly":
        return QPoly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_ambient(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            if key in out:
                merged = out[key] + coeff
                if merged:
                    out[key] = merged
                else:
                    del out[key]
            else:
                out[key] = coeff
        return QPoly._raw(self.n, out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_ambient(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(m1, m2))
                product = c1 * c2
                if key in out:
                    merged = out[key] + product
                    if merged:
                        out[key] = merged
                    else:
                        del out[key]
                elif product:
                    out[key] = product
        return QPoly._raw(self.n, out)

    def scale(self, coeff: Coeff) -> "QPoly":
        if not coeff:
            return QPoly.zero(self.n)
        out = {}
        for key, c in self.terms.items():
            product = coeff * c
            if product:
                out[key] = product
        return QPoly._raw(self.n, out)

    def __str__(self) -> str:
        return render_terms(self.terms, _mono_factors_q)

    def __repr__(self) -> str:
        return f"QPoly(n={self.n}, {self!s})"


def q_binomial(i: int, j: int, n: int) -> QPoly:
    """The denominator factor q[j] - q[i]."""
    e_i = [0] * n
    e_i[i - 1] = 1
    e_j = [0] * n
    e_j[j - 1] = 1
    return QPoly(n, {tuple(e_j): Coeff.one(), tuple(e_i): -Coeff.one()})


def denominator_poly(n: int, factors: dict) -> QPoly:
    """Expand prod (q[j] - q[i])^mult for a multiset {(i, j): mult}."""
    out = QPoly.one(n)
    for (i, j), mult in sorted(factors.items()):
        binom = q_binomial(i, j, n)
        for _ in range(mult):
            out = out * binom
    return out


class QRatFrac:
    """A formal fraction numerator / prod (q[j] - q[i])^mult, never reduced.

    Mathematical equality is `rat_eq` (cross multiplication); `==` is not
    defined on purpose.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: QPoly, denominator: Optional[dict] = None):
        self.numerator = numerator
        cleaned = {}
        if denominator:
            for (i, j), mult in denominator.items():
                if not 1 <= i < j <= numerator.n:
                    raise ValueError(f"bad denominator factor ({i},{j})")
                if mult < 0:
                    raise ValueError("denominator multiplicities must be nonnegative")
                if mult:
                    cleaned[(i, j)] = mult
        self.denominator = cleaned

    @property
    def n(self) -> int:
        return self.numerator.n

    @classmethod
    def from_poly(cls, p: QPoly) -> "QRatFrac":
        return cls(p, {})

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __neg__(self) -> "QRatFrac":
        return QRatFrac(-self.numerator, self.denominator)

    def __add__(self, other: "QRatFrac") -> "QRatFrac":
        if not isinstance(other, QRatFrac):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")
        common = dict(self.denominator)
        for key, mult in other.denominator.items():
            common[key] = max(common.get(key, 0), mult)
        lift_self = {k: m - self.denominator.get(k, 0) for k, m in common.items()}
        lift_other = {k: m - other.denominator.get(k, 0) for k, m in common.items()}
        numerator = self.numerator * denominator_poly(self.n, lift_self) + (
            other.numerator * denominator_poly(self.n, lift_other)
        )
        return QRatFrac(numerator, common)

    def __sub__(self, other: "QRatFrac") -> "QRatFrac":
        return self + (-other)

    def __mul__(self, other: "QRatFrac") -> "QRatFrac":
        if not isinstance(other, QRatFrac):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")
        merged = dict(self.denominator)
        for key, mult in other.denominator.items():
            merged[key] = merged.get(key, 0) + mult
        return QRatFrac(self.numerator * other.numerator, merged)

    def scale(self, coeff: Coeff) -> "QRatFrac":
        return QRatFrac(self.numerator.scale(coeff), self.denominator)

    def __str__(self) -> str:
        text = f"({self.numerator})"
        if self.denominator:
            factors = []
            for (i, j), mult in sorted(self.denominator.items()):
                base = f"(q[{j}]-q[{i}])"
                factors.append(base if mult == 1 else f"{base}^{mult}")
            text += " / " + "*".join(factors)
        return text

    def __repr__(self) -> str:
        return f"QRatFrac({self!s})"


def rat_eq(f: QRatFrac, g: QRatFrac) -> bool:
    """Exact equality by cross multiplication; no cancellation is attempted."""
    if f.n != g.n:
        raise ValueError(f"ambient size mismatch: {f.n} vs {g.n}")
    left = f.numerator * denominator_poly(f.n, g.denominator)
    right = g.numerator * denominator_poly(g.n, f.denominator)
    return left == right


def a_image_rat(
    p: XPoly,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> QRatFrac:
    """Apply x[i,j] -> -(q[i]*q[j] + b*q[j] + a)/(q[j] - q[i]) to p."""
    n = p.n
    beta_c = resolve_param(beta, BETA)
    alpha_c = resolve_param(alpha, ALPHA)
    numerators = {}

    def factor_numerator(i: int, j: int) -> QPoly:
        if (i, j) not in numerators:
            e_ij = [0] * n
            e_ij[i - 1] += 1
            e_ij[j - 1] += 1
            e_j = [0] * n
            e_j[j - 1] = 1
            numerators[(i, j)] = QPoly(
                n,
                {
                    tuple(e_ij): -Coeff.one(),
                    tuple(e_j): -beta_c,
                    (0,) * n: -alpha_c,
                },
            )
        return numerators[(i, j)]

    total = QRatFrac.from_poly(QPoly.zero(n))
    for mono, coeff in p.terms.items():
        numerator = QPoly.constant(n, coeff)
        denominator: dict = {}
        for (i, j), e in mono_pairs(mono):
            factor = factor_numerator(i, j)
            for _ in range(e):
                numerator = numerator * factor
            denominator[(i, j)] = e
        total = total + QRatFrac(numerator, denominator)
    return total


@dataclass
class AKillsReport:
    n: int
    samples: int
    seed: int
    generators_checked: int = 0
    products_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_a_kills_j(
    n: int,
    samples: int = 50,
    seed: int = 0,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> AKillsReport:
    """Every defining relation, and random multiples of them, map to zero."""
    from itertools import combinations
    from .rewrite import COEFF_CHOICES, random_xpoly

    report = AKillsReport(n, samples, seed)
    triples = list(combinations(range(1, n + 1), 3))
    for triple in triples:
        g = ideal_generator(*triple, n, beta, alpha)
        if not a_image_rat(g, beta, alpha).is_zero():
            report.failures.append(f"generator {triple}")
        report.generators_checked += 1
    rng = random.Random(seed)
    for index in range(samples if triples else 0):
        triple = triples[rng.randrange(len(triples))]
        g = ideal_generator(*triple, n, beta, alpha)
        coeff = rng.choice(COEFF_CHOICES)
        mono = random_xpoly(n, 3, 1, rng).terms
        mono = next(iter(mono)) if mono else None
        product = g.mul_term(mono, coeff) if mono is not None else g.scale(coeff)
        if not a_image_rat(product, beta, alpha).is_zero():
            report.failures.append(f"product {index} over generator {triple}")
        report.products_checked += 1
    return report


class QTruncSeries:
    """Laurent terms kept while neg_mass(exponent) <= order."""

    __slots__ = ("n", "order", "terms")

    def __init__(self, n: int, order: int, terms: Optional[dict] = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cleaned = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent tuple {exps} does not match n={n}")
                if coeff and neg_mass(exps) <= order:
                    cleaned[exps] = coeff
        self.n = n
        self.order = order
        self.terms = cleaned

    @classmethod
    def _raw(cls, n: int, order: int, terms: dict) -> "QTruncSeries":
        s = object.__new__(cls)
        s.n = n
        s.order = order
        s.terms = terms
        return s

    @classmethod
    def one(cls, n: int, order: int) -> "QTruncSeries":
        return cls(n, order, {(0,) * n: Coeff.one()})

    def _check_compatible(self, other: "QTruncSeries"):
        if self.n != other.n or self.order != other.order:
            raise ValueError("mismatched ambient size or truncation order")

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTruncSeries):
            return NotImplemented
        return self.n == other.n and self.order == other.order and self.terms == other.terms

    def __add__(self, other: "QTruncSeries") -> "QTruncSeries":
        if not isinstance(other, QTruncSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            if key in out:
                merged = out[key] + coeff
                if merged:
                    out[key] = merged
                else:
                    del out[key]
            else:
                out[key] = coeff
        return QTruncSeries._raw(self.n, self.order, out)

    def __mul__(self, other: "QTruncSeries") -> "QTruncSeries":
        if not isinstance(other, QTruncSeries):
            return NotImplemented
        self._check_compatible(other)
        bound = self.order
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(m1, m2))
                if neg_mass(key) > bound:
                    continue
                product = c1 * c2
                if key in out:
                    merged = out[key] + product
                    if merged:
                        out[key] = merged
                    else:
                        del out[key]
                elif product:
                    out[key] = product
        return QTruncSeries._raw(self.n, self.order, out)

    def scale(self, coeff: Coeff) -> "QTruncSeries":
        out = {}
        for key, c in self.terms.items():
            product = coeff * c
            if product:
                out[key] = product
        return QTruncSeries._raw(self.n, self.order, out)

    def __str__(self) -> str:
        return render_terms(self.terms, _mono_factors_q)

    def __repr__(self) -> str:
        return f"QTruncSeries(n={self.n}, order={self.order}, {self!s})"


def is_s_friendly(m: Monomial, subset: frozenset) -> bool:
    """Every variable x[i,j] of m has i in the subset and j outside it."""
    for (i, j), _ in mono_pairs(m):
        if i not in subset or j in subset:
            return False
    return True


def is_s_adequate(exponents: tuple, subset: frozenset) -> bool:
    """Nonnegative exponents on the subset, nonpositive off it."""
    for pos, e in enumerate(exponents, start=1):
        if pos in subset:
            if e < 0:
                return False
        elif e > 0:
            return False
    return True


def a_s_expand(
    m: Monomial,
    subset: Iterable,
    order: int,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> QTruncSeries:
    """Expand the fraction image of an S-friendly monomial as a series.

    Exact for every exponent with negative mass <= order: the geometric
    expansion of each factor may be cut at k = order because negative
    masses only accumulate (see the module docstring).
    """
    n = ambient_size(len(m))
    subset = frozenset(subset)
    if not subset <= set(range(1, n)):
        raise ValueError(f"subset must lie in 1..{n - 1}")
    if not is_s_friendly(m, subset):
        raise ValueError(f"{format_monomial(m)} is not friendly for {sorted(subset)}")
    beta_c = resolve_param(beta, BETA)
    alpha_c = resolve_param(alpha, ALPHA)

    def factor_series(i: int, j: int) -> QTruncSeries:
        terms: dict = {}
        for k in range(order + 1):
            exps = [0] * n
            exps[i - 1] = k + 1
            exps[j - 1] = -k
            terms[tuple(exps)] = -Coeff.one()
            exps = [0] * n
            exps[i - 1] = k
            exps[j - 1] = -k
            key = tuple(exps)
            terms[key] = terms.get(key, Coeff.zero()) - beta_c
            if k + 1 <= order:
                exps = [0] * n
                exps[i - 1] = k
                exps[j - 1] = -(k + 1)
                key = tuple(exps)
                terms[key] = terms.get(key, Coeff.zero()) - alpha_c
        return QTruncSeries(n, order, terms)

    out = QTruncSeries.one(n, order)
    for (i, j), e in mono_pairs(m):
        factor = factor_series(i, j)
        for _ in range(e):
            out = out * factor
    return out


class TWSeries:
    """Power series in w up to the truncation order, TPoly coefficients."""

    __slots__ = ("n", "order", "coeffs")

    def __init__(self, n: int, order: int, coeffs: Optional[Iterable] = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if coeffs is None:
            coeffs = [TPoly.zero(n)] * (order + 1)
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order + 1 coefficients")
        for c in coeffs:
            if c.n != n:
                raise ValueError("coefficient ambient size mismatch")
        self.n = n
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, n: int, order: int) -> "TWSeries":
        return cls(n, order)

    @classmethod
    def one(cls, n: int, order: int) -> "TWSeries":
        return cls.from_tpoly(TPoly.one(n), order)

    @classmethod
    def from_tpoly(cls, p: TPoly, order: int) -> "TWSeries":
        coeffs = [p] + [TPoly.zero(p.n)] * order
        return cls(p.n, order, coeffs)

    def _check_compatible(self, other: "TWSeries"):
        if self.n != other.n or self.order != other.order:
            raise ValueError("mismatched ambient size or truncation order")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TWSeries):
            return NotImplemented
        return self.n == other.n and self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other: "TWSeries") -> "TWSeries":
        if not isinstance(other, TWSeries):
            return NotImplemented
        self._check_compatible(other)
        return TWSeries(self.n, self.order, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TWSeries") -> "TWSeries":
        if not isinstance(other, TWSeries):
            return NotImplemented
        self._check_compatible(other)
        return TWSeries(self.n, self.order, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TWSeries") -> "TWSeries":
        if not isinstance(other, TWSeries):
            return NotImplemented
        self._check_compatible(other)
        out = [TPoly.zero(self.n) for _ in range(self.order + 1)]
        for d1, c1 in enumerate(self.coeffs):
            if c1.is_zero():
                continue
            for d2 in range(self.order + 1 - d1):
                c2 = other.coeffs[d2]
                if not c2.is_zero():
                    out[d1 + d2] = out[d1 + d2] + c1 * c2
        return TWSeries(self.n, self.order, out)

    def scale(self, coeff: Coeff) -> "TWSeries":
        return TWSeries(self.n, self.order, [c.scale(coeff) for c in self.coeffs])

    def __str__(self) -> str:
        parts = [f"({self.coeffs[0]})"]
        for d in range(1, self.order + 1):
            w = "w" if d == 1 else f"w^{d}"
            parts.append(f"({self.coeffs[d]})*{w}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TWSeries(n={self.n}, order={self.order}, {self!s})"


def b_map(f: QTruncSeries) -> TWSeries:
    """Exponent vector -> t-monomial of its positive part times w^neg_mass."""
    coeffs = [dict() for _ in range(f.order + 1)]
    for exps, coeff in f.terms.items():
        d = neg_mass(exps)
        key = tuple(max(e, 0) for e in exps)
        bucket = coeffs[d]
        if key in bucket:
            merged = bucket[key] + coeff
            if merged:
                bucket[key] = merged
            else:
                del bucket[key]
        else:
            bucket[key] = coeff
    return TWSeries(f.n, f.order, [TPoly._raw(f.n, bucket) for bucket in coeffs])


def e_image(
    p: TPoly,
    order: int,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> TWSeries:
    """Substitute t[i] -> -(t[i] + b + a*w)*(sum_k t[i]^k w^k) up to order.

    The input may use t[1..n-1] only; t[n] has no image.
    """
    n = p.n
    for exps in p.terms:
        if exps[n - 1]:
            raise ValueError(f"t[{n}] has no series image")
    beta_c = resolve_param(beta, BETA)
    alpha_c = resolve_param(alpha, ALPHA)

    base: dict = {}

    def variable_series(i: int) -> TWSeries:
        if i not in base:
            geometric = []
            power = TPoly.one(n)
            t_i = TPoly.variable(i, n)
            for _ in range(order + 1):
                geometric.append(power)
                power = power * t_i
            front = [TPoly.zero(n)] * (order + 1)
            front[0] = -(t_i + TPoly.constant(n, beta_c))
            if order >= 1:
                front[1] = TPoly.constant(n, -alpha_c)
            series = TWSeries(n, order, front) * TWSeries(n, order, geometric)
            base[i] = series
        return base[i]

    powers: dict = {}

    def variable_power(i: int, e: int) -> TWSeries:
        if (i, e) not in powers:
            if e == 1:
                powers[(i, e)] = variable_series(i)
            else:
                powers[(i, e)] = variable_power(i, e - 1) * variable_series(i)
        return powers[(i, e)]

    total = TWSeries.zero(n, order)
    for exps, coeff in p.terms.items():
        term = TWSeries.one(n, order)
        for pos, e in enumerate(exps):
            if e:
                term = term * variable_power(pos + 1, e)
        total = total + term.scale(coeff)
    return total


def friendly_rows(m: Monomial) -> frozenset:
    """The rows with positive total exponent; the canonical S for a pathless m."""
    n = ambient_size(len(m))
    rows = [0] * (n + 1)
    for (i, _), e in mono_pairs(m):
        rows[i] += e
    return frozenset(i for i in range(1, n) if rows[i] > 0)


def verify_ed_eq_ba(
    m: Monomial,
    order: int,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> bool:
    """Per pathless monomial: e_image(d_image(m)) equals b_map(a_s_expand(m))."""
    if not is_pathless(m):
        raise ValueError(f"{format_monomial(m)} is not pathless")
    subset = friendly_rows(m)
    left = e_image(d_image(XPoly.from_monomial(m)), order, beta, alpha)
    right = b_map(a_s_expand(m, subset, order, beta, alpha))
    return left == right


@dataclass
class EdBaReport:
    n: int
    max_degree: int
    order: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def ed_ba_sweep(
    n: int,
    max_degree: int,
    order: int,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> EdBaReport:
    """Run verify_ed_eq_ba over every pathless monomial of degree <= max_degree."""
    from .poly import all_monomials

    report = EdBaReport(n, max_degree, order)
    for degree in range(max_degree + 1):
        for m in all_monomials(n, degree):
            if not is_pathless(m):
                continue
            if not verify_ed_eq_ba(m, order, beta, alpha):
                report.failures.append(format_monomial(m))
            report.checked += 1
    return report


def random_tpoly(n: int, max_deg: int, max_terms: int, rng: random.Random) -> TPoly:
    """Random polynomial in t[1..n-1]; same coefficient pool as random_xpoly."""
    from .rewrite import COEFF_CHOICES

    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * n
        if n > 1:
            for _ in range(rng.randint(0, max_deg)):
                exps[rng.randrange(n - 1)] += 1
        mono = tuple(exps)
        coeff = rng.choice(COEFF_CHOICES)
        if mono in terms:
            merged = terms[mono] + coeff
            if merged:
                terms[mono] = merged
            else:
                del terms[mono]
        else:
            terms[mono] = coeff
    return TPoly._raw(n, terms)


def g_substitute(p: TPoly, beta: Optional[RationalLike] = None) -> TPoly:
    """Substitute t[i] -> -t[i] - b into p (all rows, including t[n])."""
    n = p.n
    beta_c = resolve_param(beta, BETA)
    images = {}

    def image_power(i: int, e: int) -> TPoly:
        if (i, e) not in images:
            if e == 1:
                images[(i, e)] = -(TPoly.variable(i, n) + TPoly.constant(n, beta_c))
            else:
                images[(i, e)] = image_power(i, e - 1) * image_power(i, 1)
        return images[(i, e)]

    total = TPoly.zero(n)
    for exps, coeff in p.terms.items():
        term = TPoly.one(n)
        for pos, e in enumerate(exps):
            if e:
                term = term * image_power(pos + 1, e)
        total = total + term.scale(coeff)
    return total


def verify_e_left_inverse(
    n: int,
    samples: int,
    seed: int,
    max_deg: int = 3,
    max_terms: int = 4,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> bool:
    """g_substitute after the w-constant term of e_image is the identity."""
    from .rewrite import derive_seed

    for index in range(samples):
        rng = random.Random(derive_seed(seed, index))
        p = random_tpoly(n, max_deg, max_terms, rng)
        constant_term = e_image(p, 0, beta, alpha).coeffs[0]
        if g_substitute(constant_term, beta) != p:
            return False
    return True
