"""The pathless reduction game.

A monomial divisible by x[i,j]*x[j,k] with i < j < k may be rewritten by

    x[i,j]*x[j,k]  ->  x[i,k]*(x[i,j] + x[j,k] + b) + a

applied to the whole coefficient of that monomial.  Play until no monomial
contains such a divisor; the result is pathless.  The game is not
confluent: different choices can end in different pathless polynomials.
What stays invariant is the image of the result under d_image, and
`verify_t_unique` checks that empirically over randomized strategies.

Every step strictly drops the pathless weight of the rewritten monomial
on all four replacement monomials, which is why the game always ends;
`pathless_step` asserts the drop on every call.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .poly import (
    Monomial,
    Triple,
    XPoly,
    ambient_size,
    col_positions,
    d_image,
    format_monomial,
    mono_one,
    num_vars,
    pair_position,
    parse_monomial,
    row_positions,
    weight_pathless,
)
from .ring import ALPHA, BETA, Coeff, RationalLike, resolve_param


class RewriteError(ValueError):
    """A step or strategy was asked to do something the game does not allow."""


@dataclass(frozen=True)
class FirstByOrder:
    """Largest reducible monomial, lexicographically smallest triple."""


@dataclass(frozen=True)
class LastByOrder:
    """Smallest reducible monomial, lexicographically largest triple."""


@dataclass(frozen=True)
class RandomStrategy:
    """Uniform choice among (reducible monomial, applicable triple) pairs.

    Choices come from random.Random(seed), so replays are deterministic.
    """

    seed: int


@dataclass(frozen=True)
class ScriptStrategy:
    """Fixed list of (monomial, triple) steps; each must apply in turn."""

    steps: tuple


Strategy = Union[FirstByOrder, LastByOrder, RandomStrategy, ScriptStrategy]


@dataclass(frozen=True)
class TraceStep:
    monomial: Monomial
    triple: Triple
    after: XPoly


def find_path_triples(m: Monomial) -> list:
    """All (i, j, k), i < j < k, with x[i,j]*x[j,k] dividing m, in lex order."""
    n = ambient_size(len(m))
    rows = row_positions(n)
    cols = col_positions(n)
    pairs_in = {}
    pairs_out = {}
    for j in range(2, n):
        ins = [i for i, p in enumerate(cols[j], start=1) if m[p]]
        outs = [k for k, p in enumerate(rows[j], start=j + 1) if m[p]]
        if ins and outs:
            pairs_in[j] = ins
            pairs_out[j] = outs
    triples = []
    for j, ins in pairs_in.items():
        for i in ins:
            for k in pairs_out[j]:
                triples.append((i, j, k))
    triples.sort()
    return triples


def pathless_step(
    p: XPoly,
    mono: Monomial,
    triple: Triple,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> XPoly:
    """Apply one rewrite at the given monomial and triple of p."""
    n = p.n
    i, j, k = triple
    if not (1 <= i < j < k <= n):
        raise RewriteError(f"malformed triple {triple} for n={n}")
    coeff = p.terms.get(mono)
    if coeff is None:
        raise RewriteError(f"monomial {format_monomial(mono)} is absent")
    positions = pair_position(n)
    pos_ij = positions[(i, j)]
    pos_jk = positions[(j, k)]
    pos_ik = positions[(i, k)]
    if not (mono[pos_ij] and mono[pos_jk]):
        raise RewriteError(
            f"x[{i},{j}]*x[{j},{k}] does not divide {format_monomial(mono)}"
        )

    base = list(mono)
    base[pos_ij] -= 1
    base[pos_jk] -= 1

    def shifted(*positions_up):
        out = list(base)
        for pos in positions_up:
            out[pos] += 1
        return tuple(out)

    beta_c = resolve_param(beta, BETA)
    alpha_c = resolve_param(alpha, ALPHA)
    replacement = (
        (shifted(pos_ik, pos_ij), coeff),
        (shifted(pos_ik, pos_jk), coeff),
        (shifted(pos_ik), coeff * beta_c),
        (tuple(base), coeff * alpha_c),
    )
    bound = weight_pathless(mono)
    assert all(weight_pathless(m) < bound for m, _ in replacement)

    terms = dict(p.terms)
    del terms[mono]
    for m, c in replacement:
        if m in terms:
            merged = terms[m] + c
            if merged:
                terms[m] = merged
            else:
                del terms[m]
        elif c:
            terms[m] = c
    return XPoly._raw(n, terms)


def _reducible_choices(p: XPoly) -> list:
    """(monomial, triples) for every reducible monomial, descending order."""
    out = []
    for m in sorted(p.terms, reverse=True):
        triples = find_path_triples(m)
        if triples:
            out.append((m, triples))
    return out


def reduce_pathless(
    p: XPoly,
    strategy: Strategy = FirstByOrder(),
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> tuple:
    """Play the game to a pathless polynomial; returns (result, trace)."""
    trace = []
    rng = random.Random(strategy.seed) if isinstance(strategy, RandomStrategy) else None
    script_pos = 0
    current = p
    while True:
        if isinstance(strategy, ScriptStrategy):
            if script_pos == len(strategy.steps):
                choices = _reducible_choices(current)
                if choices:
                    raise RewriteError("script exhausted before the result is pathless")
                break
            mono, triple = strategy.steps[script_pos]
            script_pos += 1
        else:
            choices = _reducible_choices(current)
            if not choices:
                break
            if isinstance(strategy, FirstByOrder):
                mono, triples = choices[0]
                triple = triples[0]
            elif isinstance(strategy, LastByOrder):
                mono, triples = choices[-1]
                triple = triples[-1]
            else:
                flat = [(m, t) for m, triples in choices for t in triples]
                mono, triple = flat[rng.randrange(len(flat))]
        try:
            current = pathless_step(current, mono, triple, beta, alpha)
        except RewriteError as exc:
            if isinstance(strategy, ScriptStrategy):
                raise RewriteError(f"script step {script_pos} does not apply: {exc}") from None
            raise
        trace.append(TraceStep(mono, triple, current))
    return current, trace


def format_trace(trace: list) -> str:
    """One line per step: m=<monomial> t=(i,j,k)."""
    lines = []
    for step in trace:
        i, j, k = step.triple
        lines.append(f"m={format_monomial(step.monomial)} t=({i},{j},{k})")
    return "\n".join(lines)


def parse_script(text: str, n: int) -> ScriptStrategy:
    """Read trace-format lines back as a script strategy."""
    steps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        head, sep, tail = line.partition(" t=(")
        if not head.startswith("m=") or not sep or not tail.endswith(")"):
            raise RewriteError(f"line {lineno}: expected 'm=<monomial> t=(i,j,k)'")
        mono = parse_monomial(head[2:], n)
        try:
            i, j, k = (int(part) for part in tail[:-1].split(","))
        except ValueError:
            raise RewriteError(f"line {lineno}: malformed triple") from None
        steps.append((mono, (i, j, k)))
    return ScriptStrategy(tuple(steps))


COEFF_CHOICES = (
    Coeff.rational(1),
    Coeff.rational(-1),
    Coeff.rational(2),
    Coeff.rational(-2),
    BETA,
    ALPHA,
    BETA + Coeff.one(),
)


def random_xpoly(n: int, max_deg: int, max_terms: int, rng: random.Random) -> XPoly:
    """Random polynomial: up to max_terms terms of degree <= max_deg each,
    coefficients from {1, -1, 2, -2, b, a, b+1}.  Seed-stable."""
    width = num_vars(n)
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * width
        if width:
            for _ in range(rng.randint(0, max_deg)):
                exps[rng.randrange(width)] += 1
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
    return XPoly._raw(n, terms)


def derive_seed(seed: int, *parts: int) -> int:
    """Stable per-trial stream seed from a base seed and indices."""
    out = seed & 0xFFFFFFFFFFFFFFFF
    for part in parts:
        out = (out * 1000003 + part + 1) & 0xFFFFFFFFFFFFFFFF
    return out


def strategy_suite(count: int, seed: int, trial: int) -> list:
    """The two deterministic strategies plus seeded random ones."""
    if count < 2:
        raise ValueError("need at least two strategies to compare")
    suite: list = [FirstByOrder(), LastByOrder()]
    for s in range(count - 2):
        suite.append(RandomStrategy(derive_seed(seed, trial, s)))
    return suite


@dataclass
class TUniqueFailure:
    trial: int
    input_text: str
    strategy_a: int
    strategy_b: int
    image_a: str
    image_b: str


@dataclass
class TUniqueReport:
    n: int
    trials: int
    strategies: int
    seed: int
    max_deg: int
    max_terms: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_t_unique(
    n: int,
    trials: int,
    strategies: int,
    seed: int,
    max_deg: int = 4,
    max_terms: int = 5,
    beta: Optional[RationalLike] = None,
    alpha: Optional[RationalLike] = None,
) -> TUniqueReport:
    """Reduce random inputs under several strategies; d_images must agree."""
    report = TUniqueReport(n, trials, strategies, seed, max_deg, max_terms)
    for trial in range(trials):
        rng = random.Random(derive_seed(seed, trial))
        p = random_xpoly(n, max_deg, max_terms, rng)
        images = []
        for strat in strategy_suite(strategies, seed, trial):
            result, _ = reduce_pathless(p, strat, beta, alpha)
            images.append(d_image(result))
        report.checked += 1
        for idx in range(1, len(images)):
            if images[idx] != images[0]:
                report.failures.append(
                    TUniqueFailure(trial, str(p), 0, idx, str(images[0]), str(images[idx]))
                )
    return report


def d_invariance_counterexample() -> tuple:
    """A pair (p, q) with q one rewrite step from p but d_image(p) != d_image(q).

    Finished games agree in d_image, yet d_image is not constant along the
    congruence the steps generate; this pair (n = 3) is the smallest witness,
    so agreement of finished games cannot follow from congruence alone.
    """
    p = XPoly.variable(1, 2, 3) * XPoly.variable(2, 3, 3)
    mono = next(iter(p.terms))
    q = pathless_step(p, mono, (1, 2, 3))
    return p, q
