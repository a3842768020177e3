"""Groebner machinery for the defining relations.

The relations

    x[i,j]*x[j,k] - x[i,k]*(x[i,j] + x[j,k] + b) - a        (i < j < k)

generate the ideal the quotient algebra divides by.  Negating each one
gives a monic family with head term x[i,k]*x[i,j] under the term order
of the poly module:

    x[i,k]*x[i,j] - x[i,j]*x[j,k] + x[i,k]*x[j,k] + b*x[i,k] + a

This family is a Groebner basis; `buchberger_check` confirms the
criterion mechanically and `normal_form` reduces any polynomial to its
unique forkless representative (the monomials with no x[i,j]*x[i,k]
divisor are exactly the irreducible ones).

Each reduction step subtracts a multiple of a basis element chosen so the
rewritten monomial is replaced by strictly smaller ones; a step counter
guards against defects, not against the math.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Callable, Optional

from .poly import (
    Monomial,
    Triple,
    XPoly,
    mono_div,
    mono_lcm,
    row_positions,
)
from .ring import ALPHA, BETA, Coeff, RationalLike, resolve_param

DEFAULT_MAX_STEPS = 500_000


def ideal_generator(
    i: int,
    j: int,
    k: int,
    n: int,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> XPoly:
    """The defining relation x[i,j]*x[j,k] - x[i,k]*(x[i,j]+x[j,k]+b) - a."""
    if not (1 <= i < j < k <= n):
        raise ValueError(f"need 1 <= i < j < k <= n, got ({i},{j},{k}) with n={n}")
    x_ij = XPoly.variable(i, j, n)
    x_jk = XPoly.variable(j, k, n)
    x_ik = XPoly.variable(i, k, n)
    beta_term = XPoly.constant(n, resolve_param(beta, BETA))
    alpha_term = XPoly.constant(n, resolve_param(alpha, ALPHA))
    return x_ij * x_jk - x_ik * (x_ij + x_jk + beta_term) - alpha_term


@dataclass(frozen=True)
class BasisElement:
    triple: Triple
    poly: XPoly
    head: Monomial


class GroebnerBasis:
    """The monic basis, one element per triple i < j < k, in lex order."""

    def __init__(self, n: int, elements: list):
        self.n = n
        self.elements = tuple(elements)
        self._by_triple = {e.triple: e for e in self.elements}

    def element(self, triple: Triple) -> BasisElement:
        return self._by_triple[triple]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def generate_basis(
    n: int,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> GroebnerBasis:
    """Basis elements -1 * relation, head x[i,k]*x[i,j], for all triples."""
    elements = []
    for i, j, k in combinations(range(1, n + 1), 3):
        poly = -ideal_generator(i, j, k, n, beta, alpha)
        head, head_coeff = poly.head()
        assert head_coeff == Coeff.one()
        elements.append(BasisElement((i, j, k), poly, head))
    return GroebnerBasis(n, elements)


def head_term(p: XPoly) -> Monomial:
    return p.head()[0]


def head_coeff(p: XPoly) -> Coeff:
    return p.head()[1]


def _fork_triples(m: Monomial, n: int) -> list:
    """Triples (i, j, k) whose basis head x[i,k]*x[i,j] divides m, lex order."""
    rows = row_positions(n)
    out = []
    for i in range(1, n):
        cols = [j for j, p in enumerate(rows[i], start=i + 1) if m[p]]
        for a in range(len(cols)):
            for b in range(a + 1, len(cols)):
                out.append((i, cols[a], cols[b]))
    return out


def _reducible_choices(p: XPoly) -> list:
    out = []
    for m in sorted(p.terms, reverse=True):
        triples = _fork_triples(m, p.n)
        if triples:
            out.append((m, triples))
    return out


def reduce_step(
    p: XPoly,
    basis: GroebnerBasis,
    chooser: Optional[Callable] = None,
) -> Optional[XPoly]:
    """One reduction p - c*s*g, or None when p is already forkless.

    The default choice is the order-largest reducible monomial and the
    lexicographically smallest dividing triple; `chooser` may override it
    (it receives the list built by `_reducible_choices`).
    """
    if p.n != basis.n:
        raise ValueError(f"ambient size mismatch: {p.n} vs {basis.n}")
    choices = _reducible_choices(p)
    if not choices:
        return None
    if chooser is None:
        mono, triples = choices[0]
        triple = triples[0]
    else:
        mono, triple = chooser(choices)
    element = basis.element(triple)
    shift = mono_div(mono, element.head)
    coeff = p.terms[mono]
    return p - element.poly.mul_term(shift, coeff)


def normal_form(
    p: XPoly,
    basis: GroebnerBasis,
    chooser: Optional[Callable] = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> XPoly:
    """Reduce to the unique forkless representative."""
    current = p
    for _ in range(max_steps):
        reduced = reduce_step(current, basis, chooser)
        if reduced is None:
            return current
        current = reduced
    raise RuntimeError(f"normal form did not terminate within {max_steps} steps")


def random_chooser(rng: random.Random) -> Callable:
    """A selection rule drawing uniformly from all (monomial, triple) options."""

    def choose(choices: list) -> tuple:
        flat = [(m, t) for m, triples in choices for t in triples]
        return flat[rng.randrange(len(flat))]

    return choose


def spol(g1: XPoly, g2: XPoly) -> XPoly:
    """s1*g1 - s2*g2 with both head terms shifted to the heads' lcm."""
    h1, c1 = g1.head()
    h2, c2 = g2.head()
    lcm = mono_lcm(h1, h2)
    s1 = mono_div(lcm, h1)
    s2 = mono_div(lcm, h2)
    return g1.mul_term(s1, c2) - g2.mul_term(s2, c1)


def _heads_disjoint(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def buchberger_check(basis: GroebnerBasis, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Every s-polynomial of a non-disjoint head pair reduces to zero.

    Pairs with disjoint heads reduce to zero automatically and are skipped.
    """
    for e1, e2 in combinations_with_replacement(basis.elements, 2):
        if _heads_disjoint(e1.head, e2.head):
            continue
        if not normal_form(spol(e1.poly, e2.poly), basis, max_steps=max_steps).is_zero():
            return False
    return True


def ideal_member(p: XPoly, basis: Optional[GroebnerBasis] = None) -> bool:
    """Membership in the defining ideal: the normal form vanishes.

    Pass a specialized basis when p lives at numeric parameter values.
    """
    if basis is None:
        basis = generate_basis(p.n)
    return normal_form(p, basis).is_zero()
