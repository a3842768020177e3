"""Sparse polynomials in the pair variables x[i,j] and the row variables t[i].

A monomial in the x variables is a plain tuple of exponents with one slot
per pair (i, j), 1 <= i < j <= n, laid out row-major:

    n = 4:   x[1,2], x[1,3], x[1,4], x[2,3], x[2,4], x[3,4]

Row-major position also fixes the term order: x[1,2] is the largest
variable and x[n-1,n] the smallest, and two monomials compare at the
largest variable whose exponents differ (the one with the bigger exponent
there is the bigger monomial).  With this layout that is exactly Python's
tuple comparison, so `max(p.terms)` is the head monomial of p.

A t-monomial is an exponent tuple of length n, slot i-1 for t[i].

Both polynomial types store {exponent tuple: Coeff} with zero
coefficients pruned, so `==` is ring equality.  Instances are immutable
by convention; operations always build new values.

Text form (used by the parser, the formatter, and the CLI):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rat | var | var '^' uint
    var    := 'x[' uint ',' uint ']' | 't[' uint ']' | 'b' | 'a'
    rat    := uint | uint '/' uint

Whitespace is insignificant.  x-variables and t-variables never mix in
one polynomial.  The formatter emits one grammar term per
(rational, b-power, a-power, monomial) combination, monomials in
descending term order, so parse(format(p)) == p.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .ring import ALPHA, BETA, Coeff, RationalLike

Monomial = tuple  # exponent tuple over the x variables, row-major
TMonomial = tuple  # exponent tuple over t[1..n]
Triple = tuple  # (i, j, k) with 1 <= i < j < k <= n


def num_vars(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple:
    """All pairs (i, j), i < j, in row-major order."""
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def pair_position(n: int) -> dict:
    """Map each pair (i, j) to its slot in the exponent tuple."""
    return {pair: pos for pos, pair in enumerate(pair_list(n))}


@lru_cache(maxsize=None)
def row_positions(n: int) -> tuple:
    """row_positions(n)[i] lists the slots of x[i,*] (index 0 unused)."""
    rows = [[] for _ in range(n + 1)]
    for pos, (i, _) in enumerate(pair_list(n)):
        rows[i].append(pos)
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def col_positions(n: int) -> tuple:
    """col_positions(n)[j] lists the slots of x[*,j] (index 0 unused)."""
    cols = [[] for _ in range(n + 1)]
    for pos, (_, j) in enumerate(pair_list(n)):
        cols[j].append(pos)
    return tuple(tuple(c) for c in cols)


@lru_cache(maxsize=None)
def ambient_size(width: int) -> int:
    """Recover n from the length of an exponent tuple."""
    n = 1
    while num_vars(n) < width:
        n += 1
    if num_vars(n) != width:
        raise ValueError(f"{width} is not of the form n*(n-1)/2")
    return n


def var_position(i: int, j: int, n: int) -> int:
    try:
        return pair_position(n)[(i, j)]
    except KeyError:
        raise ValueError(f"x[{i},{j}] is not a variable for n={n}") from None


def mono_one(n: int) -> Monomial:
    return (0,) * num_vars(n)


def mono_from_pairs(n: int, exponents: dict) -> Monomial:
    """Build a monomial from {(i, j): exponent}; zero entries are dropped."""
    exps = [0] * num_vars(n)
    for (i, j), e in exponents.items():
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e:
            exps[var_position(i, j, n)] += e
    return tuple(exps)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b, strict=True):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b, strict=True))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_pairs(m: Monomial) -> Iterator[tuple]:
    """Yield ((i, j), exponent) for the variables actually present."""
    pairs = pair_list(ambient_size(len(m)))
    for pos, e in enumerate(m):
        if e:
            yield pairs[pos], e


def order_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0, or 1: compare at the largest variable whose exponents differ."""
    if len(a) != len(b):
        raise ValueError("monomials from different ambient sizes")
    return (a > b) - (a < b)


def is_pathless(m: Monomial) -> bool:
    """True when no x[i,j]*x[j,k] with i < j < k divides m."""
    n = ambient_size(len(m))
    rows = row_positions(n)
    cols = col_positions(n)
    for j in range(2, n):
        if any(m[p] for p in cols[j]) and any(m[p] for p in rows[j]):
            return False
    return True


def is_forkless(m: Monomial) -> bool:
    """True when no x[i,j]*x[i,k] with i < j < k divides m."""
    n = ambient_size(len(m))
    for row in row_positions(n)[1:]:
        if sum(1 for p in row if m[p]) > 1:
            return False
    return True


def weight_pathless(m: Monomial) -> int:
    """Sum of exponent * (n - j + i); drops strictly at every pathless step."""
    if not m:
        return 0
    n = ambient_size(len(m))
    pairs = pair_list(n)
    return sum(e * (n - pairs[pos][1] + pairs[pos][0]) for pos, e in enumerate(m) if e)


def weight_alt(m: Monomial) -> int:
    """Sum of exponent * (j - i); reported for inspection only."""
    if not m:
        return 0
    pairs = pair_list(ambient_size(len(m)))
    return sum(e * (pairs[pos][1] - pairs[pos][0]) for pos, e in enumerate(m) if e)


def all_monomials(n: int, degree: int) -> Iterator[Monomial]:
    """All monomials of exact total degree in the x variables for this n."""
    width = num_vars(n)
    if degree == 0:
        yield (0,) * width
        return
    if width == 0:
        return

    def rec(pos: int, remaining: int, prefix: list):
        if pos == width - 1:
            yield tuple(prefix + [remaining])
            return
        for e in range(remaining + 1):
            yield from rec(pos + 1, remaining - e, prefix + [e])

    yield from rec(0, degree, [])


class XPoly:
    """Polynomial in the x variables with Coeff coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        width = num_vars(n)
        cleaned = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != width:
                    raise ValueError(f"exponent tuple {mono} does not match n={n}")
                if coeff:
                    cleaned[mono] = coeff
        self.n = n
        self.terms = cleaned

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "XPoly":
        # internal: terms already pruned and of the right width
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "XPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "XPoly":
        return cls.constant(n, Coeff.one())

    @classmethod
    def constant(cls, n: int, coeff: Coeff) -> "XPoly":
        if not coeff:
            return cls.zero(n)
        return cls._raw(n, {mono_one(n): coeff})

    @classmethod
    def variable(cls, i: int, j: int, n: int) -> "XPoly":
        exps = [0] * num_vars(n)
        exps[var_position(i, j, n)] = 1
        return cls._raw(n, {tuple(exps): Coeff.one()})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: Optional[Coeff] = None) -> "XPoly":
        n = ambient_size(len(m))
        coeff = Coeff.one() if coeff is None else coeff
        return cls(n, {m: coeff})

    def _check_ambient(self, other: "XPoly"):
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __neg__(self) -> "XPoly":
        return XPoly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_ambient(other)
        return XPoly._raw(self.n, _add_terms(self.terms, other.terms))

    def __sub__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_ambient(other)
        return XPoly._raw(self.n, _sub_terms(self.terms, other.terms))

    def __mul__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check_ambient(other)
        return XPoly._raw(self.n, _mul_terms(self.terms, other.terms))

    def scale(self, coeff: Coeff) -> "XPoly":
        if not coeff:
            return XPoly.zero(self.n)
        return XPoly._raw(self.n, _scale_terms(self.terms, coeff))

    def mul_term(self, mono: Monomial, coeff: Coeff) -> "XPoly":
        """Multiply by a single term coeff * mono."""
        if not coeff:
            return XPoly.zero(self.n)
        out = {}
        for m, c in self.terms.items():
            product = coeff * c
            if product:
                out[mono_mul(m, mono)] = product
        return XPoly._raw(self.n, out)

    def coefficient(self, mono: Monomial) -> Coeff:
        return self.terms.get(mono, Coeff.zero())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def head(self) -> tuple:
        """(monomial, coefficient) at the order-largest monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no head term")
        m = max(self.terms)
        return m, self.terms[m]

    def monomials(self) -> list:
        return sorted(self.terms, reverse=True)

    def substitute(
        self,
        beta: Optional[RationalLike] = None,
        alpha: Optional[RationalLike] = None,
    ) -> "XPoly":
        """Specialize parameters in every coefficient; None keeps the symbol."""
        if beta is None and alpha is None:
            return self
        return XPoly(self.n, {m: c.substitute(beta, alpha) for m, c in self.terms.items()})

    def __str__(self) -> str:
        return render_terms(self.terms, _mono_factors_x)

    def __repr__(self) -> str:
        return f"XPoly(n={self.n}, {self!s})"


class TPoly:
    """Polynomial in t[1..n] with Coeff coefficients."""

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
    def _raw(cls, n: int, terms: dict) -> "TPoly":
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "TPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "TPoly":
        return cls.constant(n, Coeff.one())

    @classmethod
    def constant(cls, n: int, coeff: Coeff) -> "TPoly":
        if not coeff:
            return cls.zero(n)
        return cls._raw(n, {(0,) * n: coeff})

    @classmethod
    def variable(cls, i: int, n: int) -> "TPoly":
        if not 1 <= i <= n:
            raise ValueError(f"t[{i}] is not a variable for n={n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls._raw(n, {tuple(exps): Coeff.one()})

    def _check_ambient(self, other: "TPoly"):
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __neg__(self) -> "TPoly":
        return TPoly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        self._check_ambient(other)
        return TPoly._raw(self.n, _add_terms(self.terms, other.terms))

    def __sub__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        self._check_ambient(other)
        return TPoly._raw(self.n, _sub_terms(self.terms, other.terms))

    def __mul__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        self._check_ambient(other)
        return TPoly._raw(self.n, _mul_terms(self.terms, other.terms))

    def scale(self, coeff: Coeff) -> "TPoly":
        if not coeff:
            return TPoly.zero(self.n)
        return TPoly._raw(self.n, _scale_terms(self.terms, coeff))

    def substitute(
        self,
        beta: Optional[RationalLike] = None,
        alpha: Optional[RationalLike] = None,
    ) -> "TPoly":
        if beta is None and alpha is None:
            return self
        return TPoly(self.n, {m: c.substitute(beta, alpha) for m, c in self.terms.items()})

    def __str__(self) -> str:
        return render_terms(self.terms, _mono_factors_t)

    def __repr__(self) -> str:
        return f"TPoly(n={self.n}, {self!s})"


def _add_terms(left: dict, right: dict) -> dict:
    out = dict(left)
    for key, coeff in right.items():
        if key in out:
            merged = out[key] + coeff
            if merged:
                out[key] = merged
            else:
                del out[key]
        else:
            out[key] = coeff
    return out


def _sub_terms(left: dict, right: dict) -> dict:
    out = dict(left)
    for key, coeff in right.items():
        if key in out:
            merged = out[key] - coeff
            if merged:
                out[key] = merged
            else:
                del out[key]
        else:
            out[key] = -coeff
    return out


def _mul_terms(left: dict, right: dict) -> dict:
    out: dict = {}
    for m1, c1 in left.items():
        for m2, c2 in right.items():
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
    return out


def _scale_terms(terms: dict, coeff: Coeff) -> dict:
    out = {}
    for key, c in terms.items():
        product = coeff * c
        if product:
            out[key] = product
    return out


def d_image(p: XPoly) -> TPoly:
    """Substitute t[i] for every x[i,j]; a ring homomorphism onto t[1..n-1]."""
    n = p.n
    out: dict = {}
    for mono, coeff in p.terms.items():
        texp = [0] * n
        for (i, _), e in mono_pairs(mono):
            texp[i - 1] += e
        key = tuple(texp)
        if key in out:
            merged = out[key] + coeff
            if merged:
                out[key] = merged
            else:
                del out[key]
        else:
            out[key] = coeff
    return TPoly._raw(n, out)


# ---------------------------------------------------------------------------
# formatting


def _mono_factors_x(mono: Monomial) -> list:
    pairs = pair_list(ambient_size(len(mono)))
    out = []
    for pos, e in enumerate(mono):
        if e:
            i, j = pairs[pos]
            out.append(f"x[{i},{j}]" if e == 1 else f"x[{i},{j}]^{e}")
    return out


def _mono_factors_t(exps: TMonomial) -> list:
    out = []
    for pos, e in enumerate(exps):
        if e:
            out.append(f"t[{pos + 1}]" if e == 1 else f"t[{pos + 1}]^{e}")
    return out


def render_terms(terms: dict, mono_factors) -> str:
    """Canonical text for {exponent tuple: Coeff}.

    One grammar term per (rational, b-power, a-power, monomial), monomials
    descending, parameter degrees descending inside each monomial.
    """
    if not terms:
        return "0"
    parts = []
    for mono in sorted(terms, reverse=True):
        var_factors = mono_factors(mono)
        for (deg_b, deg_a), value in terms[mono].terms():
            factors = []
            mag = abs(value)
            if mag != 1 or (deg_b == 0 and deg_a == 0 and not var_factors):
                factors.append(str(mag))
            if deg_b:
                factors.append("b" if deg_b == 1 else f"b^{deg_b}")
            if deg_a:
                factors.append("a" if deg_a == 1 else f"a^{deg_a}")
            factors.extend(var_factors)
            text = "*".join(factors)
            if not parts:
                parts.append(text if value > 0 else "-" + text)
            else:
                parts.append(("+ " if value > 0 else "- ") + text)
    return " ".join(parts)


def format_monomial(m: Monomial) -> str:
    """Bare monomial text, '1' for the empty monomial."""
    factors = _mono_factors_x(m)
    return "*".join(factors) if factors else "1"


# ---------------------------------------------------------------------------
# parsing


class PolyParseError(ValueError):
    """Syntax or range error in polynomial text, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise PolyParseError(f"expected '{ch}'", self.pos)

    def read_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolyParseError("expected an unsigned integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_terms(text: str, n: int, family: str) -> dict:
    """Parse the grammar into {exponent tuple: Coeff} for one variable family."""
    width = num_vars(n) if family == "x" else n
    sc = _Scanner(text)
    terms: dict = {}

    def parse_factor(coeff: Coeff, exps: list) -> Coeff:
        ch = sc.peek()
        start = sc.pos
        if ch.isdigit():
            numerator = sc.read_uint()
            if sc.take("/"):
                denominator = sc.read_uint()
                if denominator == 0:
                    raise PolyParseError("zero denominator", start)
                return coeff * Coeff.rational(Fraction(numerator, denominator))
            return coeff * Coeff.rational(numerator)
        if ch == "b" or ch == "a":
            sc.pos += 1
            e = sc.read_uint() if sc.take("^") else 1
            return coeff * Coeff.param_term(e if ch == "b" else 0, e if ch == "a" else 0)
        if ch == "x" or ch == "t":
            if ch != family:
                raise PolyParseError(f"{ch}-variables are not allowed here", sc.pos)
            sc.pos += 1
            sc.expect("[")
            i = sc.read_uint()
            if family == "x":
                sc.expect(",")
                j = sc.read_uint()
                sc.expect("]")
                if not 1 <= i < j:
                    raise PolyParseError(f"x[{i},{j}] violates i < j", start)
                if j > n:
                    raise PolyParseError(f"x[{i},{j}] is out of range for n={n}", start)
                pos = pair_position(n)[(i, j)]
            else:
                sc.expect("]")
                if not 1 <= i <= n:
                    raise PolyParseError(f"t[{i}] is out of range for n={n}", start)
                pos = i - 1
            e = sc.read_uint() if sc.take("^") else 1
            exps[pos] += e
            return coeff
        raise PolyParseError("expected a factor", sc.pos)

    def parse_term() -> tuple:
        coeff = Coeff.one()
        exps = [0] * width
        coeff = parse_factor(coeff, exps)
        while sc.take("*"):
            coeff = parse_factor(coeff, exps)
        return tuple(exps), coeff

    negative = sc.take("-")
    while True:
        mono, coeff = parse_term()
        if negative:
            coeff = -coeff
        if mono in terms:
            merged = terms[mono] + coeff
            if merged:
                terms[mono] = merged
            else:
                del terms[mono]
        elif coeff:
            terms[mono] = coeff
        if sc.done():
            break
        if sc.take("+"):
            negative = False
        elif sc.take("-"):
            negative = True
        else:
            raise PolyParseError("expected '+', '-', or end of input", sc.pos)
    return terms


def parse_poly(text: str, n: int) -> XPoly:
    """Parse x-variable polynomial text for ambient size n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return XPoly._raw(n, _parse_terms(text, n, "x"))


def parse_tpoly(text: str, n: int) -> TPoly:
    """Parse t-variable polynomial text for ambient size n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return TPoly._raw(n, _parse_terms(text, n, "t"))


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse a single monomial with coefficient one (as in trace lines)."""
    terms = _parse_terms(text, n, "x")
    if len(terms) != 1:
        raise PolyParseError("expected a single monomial", 0)
    mono, coeff = next(iter(terms.items()))
    if coeff != Coeff.one():
        raise PolyParseError("expected coefficient one", 0)
    return mono
