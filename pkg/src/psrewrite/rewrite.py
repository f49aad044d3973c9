"""Rewriting of truncated power series modulo a finite rule set.

A rule set R = {s_1..s_r} of nonzero series induces one-step reduction:
pick a stored monomial M of f divisible by the leading monomial of some
rule, M = m * LM(s_i), and subtract (coeff(f,M)/LC(s_i)) * m * s_i.  The
step kills the coefficient at M and only touches monomials >= M, so
reducing the smallest reducible monomial first (smallest applicable rule
index on ties) drives every coefficient below a degree bound to its
normal-form value in finitely many steps.

Everything here works modulo an explicit precision: a normalisation below
degree p is a faithful finite prefix of the convergent infinite reduction
chain, and all certificates (cofactors, membership verdicts, divergence
witnesses) are stated "below degree p".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import (
    DimensionMismatchError,
    InvalidTraceError,
    NotReducibleError,
    PreconditionFailedError,
    PrecisionUnattainableError,
)
from .monomials import Monomial, MonomialOrder
from .series import TruncatedSeries, delta


@dataclass(frozen=True)
class RewriteRule:
    """A nonzero series with cached leading data for the opposite order."""

    body: TruncatedSeries
    leading_monomial: Monomial
    leading_coefficient: Fraction

    @classmethod
    def from_series(cls, body: TruncatedSeries, order: MonomialOrder) -> RewriteRule:
        lm, lc = body.leading(order)  # raises on empty known support
        return cls(body, lm, lc)


@dataclass(frozen=True)
class RuleSet:
    """An ordered family of rewrite rules; line order fixes the 1-based
    indices that tie-breaking and traces refer to."""

    rules: tuple[RewriteRule, ...]
    order: MonomialOrder
    n: int

    @classmethod
    def from_series(cls, bodies: Sequence[TruncatedSeries], order: MonomialOrder,
                    n: Optional[int] = None) -> RuleSet:
        if n is None:
            if not bodies:
                raise ValueError("variable count required for an empty rule set")
            n = bodies[0].n
        for b in bodies:
            if b.n != n:
                raise DimensionMismatchError(f"rule over {b.n} variables in a {n}-variable system")
        return cls(tuple(RewriteRule.from_series(b, order) for b in bodies), order, n)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def rule(self, i: int) -> RewriteRule:
        """Rule number i, 1-based."""
        if not 1 <= i <= len(self.rules):
            raise NotReducibleError(f"rule index {i} out of range 1..{len(self.rules)}")
        return self.rules[i - 1]

    def dividing_rules(self, m: Monomial) -> list[int]:
        """1-based indices of rules whose leading monomial divides m."""
        return [i + 1 for i, r in enumerate(self.rules)
                if r.leading_monomial.divides(m) is not None]


@dataclass(frozen=True)
class ReductionStep:
    monomial: Monomial       # the reduced monomial M
    rule_index: int          # 1-based index i
    quotient: Monomial       # m with M = m * LM(s_i)
    coeff: Fraction          # coefficient of M at the time of reduction


@dataclass(frozen=True)
class ReductionTrace:
    """A finite reduction chain prefix: replaying the steps from `start`
    reproduces `end` below `end_precision`."""

    start: TruncatedSeries
    steps: tuple[ReductionStep, ...]
    end: TruncatedSeries
    end_precision: int

    def __len__(self) -> int:
        return len(self.steps)


def reducible_monomials(f: TruncatedSeries, rules: RuleSet) -> set[Monomial]:
    """Stored monomials of f divisible by some rule's leading monomial."""
    if f.n != rules.n:
        raise DimensionMismatchError(f"series over {f.n} variables, rules over {rules.n}")
    lms = [r.leading_monomial for r in rules.rules]
    return {m for m in f.support if any(lm.divides(m) is not None for lm in lms)}


def reduce_step(f: TruncatedSeries, rules: RuleSet, M: Monomial,
                i: int) -> tuple[TruncatedSeries, ReductionStep]:
    """One reduction of f at monomial M with rule i.

    The result g has coefficient 0 at M and agrees with f on every
    monomial strictly smaller than M; its precision is
    min(p_f, deg(m) + p_rule).
    """
    rule = rules.rule(i)
    coeff = f.coefficient(M)
    if coeff == 0:
        raise NotReducibleError(f"monomial {M} not in the known support")
    m = rule.leading_monomial.divides(M)
    if m is None:
        raise NotReducibleError(f"leading monomial of rule {i} does not divide {M}")
    g = f.subtract(rule.body.scale_term(coeff / rule.leading_coefficient, m))
    return g, ReductionStep(M, i, m, coeff)


Chooser = Callable[[list[Monomial], TruncatedSeries], tuple[Monomial, int]]


def _normalize_with(f: TruncatedSeries, rules: RuleSet, target_precision: int,
                    choose: Chooser) -> ReductionTrace:
    if f.n != rules.n:
        raise DimensionMismatchError(f"series over {f.n} variables, rules over {rules.n}")
    if target_precision < 0:
        raise ValueError("target precision must be a natural number")
    if f.precision is not None and f.precision < target_precision:
        raise PrecisionUnattainableError(
            f"input precision {f.precision} below target {target_precision}")

    order = rules.order
    h = f
    steps: list[ReductionStep] = []
    while True:
        candidates = sorted(
            (m for m in reducible_monomials(h, rules) if m.degree < target_precision),
            key=order.key)
        if not candidates:
            break
        M, i = choose(candidates, h)
        h, step = reduce_step(h, rules, M, i)
        if h.precision is not None and h.precision < target_precision:
            raise PrecisionUnattainableError(
                f"rule truncation caps precision at {h.precision} < target {target_precision} "
                f"after reducing {M} with rule {i}")
        steps.append(step)

    if reducible_monomials(h, rules):
        # Reducible monomials remain at degree >= target: the normal form
        # is only pinned down below the target, so say exactly that.
        end = h.truncate(target_precision)
        end_precision = target_precision
    else:
        end = h
        end_precision = target_precision if h.precision is None else h.precision
    return ReductionTrace(f, tuple(steps), end, end_precision)


def normalize(f: TruncatedSeries, rules: RuleSet, target_precision: int) -> ReductionTrace:
    """Reduce f below the target degree with the canonical strategy:
    always the smallest reducible monomial, smallest rule index on ties.

    The reduced monomials then strictly increase, which both terminates
    (finitely many monomials under any bound) and leaves every coefficient
    below the last reduced monomial final.
    """
    def choose(candidates: list[Monomial], _h: TruncatedSeries) -> tuple[Monomial, int]:
        M = candidates[0]
        return M, rules.dividing_rules(M)[0]

    return _normalize_with(f, rules, target_precision, choose)


def normalize_random(f: TruncatedSeries, rules: RuleSet, target_precision: int,
                     seed: int) -> ReductionTrace:
    """Reduce f below the target degree, drawing the reducible monomial
    and the applicable rule uniformly at each step (reproducible per seed)."""
    rng = random.Random(seed)

    def choose(candidates: list[Monomial], _h: TruncatedSeries) -> tuple[Monomial, int]:
        M = rng.choice(candidates)
        return M, rng.choice(rules.dividing_rules(M))

    return _normalize_with(f, rules, target_precision, choose)


def _replay(trace: ReductionTrace, rules: RuleSet):
    """Yield (h_before, step, h_after) while validating every step."""
    h = trace.start
    for k, step in enumerate(trace.steps):
        rule = rules.rule(step.rule_index)
        if step.quotient.multiply(rule.leading_monomial) != step.monomial:
            raise InvalidTraceError(
                f"step {k + 1}: quotient * LM(rule {step.rule_index}) != {step.monomial}")
        actual = h.coefficient(step.monomial)
        if actual != step.coeff or actual == 0:
            raise InvalidTraceError(
                f"step {k + 1}: recorded coefficient {step.coeff} at {step.monomial}, found {actual}")
        nxt = h.subtract(rule.body.scale_term(step.coeff / rule.leading_coefficient,
                                              step.quotient))
        yield h, step, nxt
        h = nxt
    if h.truncate(trace.end_precision) != trace.end.truncate(trace.end_precision):
        raise InvalidTraceError("replayed end differs from recorded end below end precision")


def cofactors(trace: ReductionTrace, rules: RuleSet) -> tuple[TruncatedSeries, ...]:
    """Per-rule quotients q_1..q_r with start = end + sum q_i s_i below the
    trace's end precision.  Each step at M = m * LM(s_i) contributes
    (coeff/LC(s_i)) * m to q_i."""
    n = rules.n
    acc: list[dict[Monomial, Fraction]] = [dict() for _ in range(len(rules))]
    for _h, step, _nxt in _replay(trace, rules):
        rule = rules.rule(step.rule_index)
        bucket = acc[step.rule_index - 1]
        c = bucket.get(step.quotient, Fraction(0)) + step.coeff / rule.leading_coefficient
        if c == 0:
            bucket.pop(step.quotient, None)
        else:
            bucket[step.quotient] = c
    return tuple(TruncatedSeries(n, terms) for terms in acc)


@dataclass(frozen=True)
class StandardRepresentation:
    """Cofactors expressing f as sum q_i s_i below a precision, plus the
    no-cancellation check: the least leading monomial among the nonzero
    summands q_i s_i must be the leading monomial of f itself."""

    cofactors: tuple[TruncatedSeries, ...]
    leading_monomial: Monomial
    min_summand_leading: Optional[Monomial]
    no_cancellation: bool
    trace: ReductionTrace


def standard_representation(f: TruncatedSeries, rules: RuleSet,
                            precision: int) -> Optional[StandardRepresentation]:
    """Divide f by the rules; when the residual vanishes below the
    precision, return the cofactors together with the cancellation check.
    None when a nonzero residual survives."""
    lm_f, _ = f.leading(rules.order)
    trace = normalize(f, rules, precision)
    if not trace.end.truncate(precision).known_zero():
        return None
    qs = cofactors(trace, rules)
    order = rules.order
    summand_lms = []
    for q, rule in zip(qs, rules.rules):
        if q.known_zero():
            continue
        summand_lms.append(q.multiply(rule.body).leading(order)[0])
    min_lm = order.min(summand_lms) if summand_lms else None
    return StandardRepresentation(qs, lm_f, min_lm, min_lm == lm_f, trace)


def multiple_to_zero_chain(q: TruncatedSeries, i: int, rules: RuleSet,
                           precision: int) -> ReductionTrace:
    """Reduce q * s_i to zero with rule i alone, walking the support of q
    in increasing order; every quotient monomial is a support element of q
    and the whole known part telescopes away."""
    rule = rules.rule(i)
    start = q.multiply(rule.body)
    if start.precision is not None and start.precision < precision:
        raise PrecisionUnattainableError(
            f"product precision {start.precision} below target {precision}")
    order = rules.order
    h = start
    steps: list[ReductionStep] = []
    for m in sorted(q.support, key=order.key):
        M = m.multiply(rule.leading_monomial)
        coeff = h.coefficient(M)
        if coeff == 0:
            continue  # truncated away: the slice lies beyond the precision
        h, step = reduce_step(h, rules, M, i)
        steps.append(step)
    assert h.known_zero(), "known part should telescope to zero"
    end = h
    end_precision = precision if end.precision is None else end.precision
    return ReductionTrace(start, tuple(steps), end, end_precision)


def translate(f: TruncatedSeries, g: TruncatedSeries, trace: ReductionTrace,
              rules: RuleSet) -> tuple[TruncatedSeries, TruncatedSeries,
                                       ReductionTrace, ReductionTrace]:
    """Lift a reduction chain of f - g onto f and g separately.

    Each step at monomial M is applied on the side(s) whose support
    contains M and skipped on the other, so f' - g' equals the chain's end
    below the common precision.
    """
    if trace.start != f.subtract(g):
        raise InvalidTraceError("trace does not start at f - g")
    f_k, g_k = f, g
    f_steps: list[ReductionStep] = []
    g_steps: list[ReductionStep] = []
    for _h, step, _nxt in _replay(trace, rules):
        if f_k.coefficient(step.monomial) != 0:
            f_k, s = reduce_step(f_k, rules, step.monomial, step.rule_index)
            f_steps.append(s)
        if g_k.coefficient(step.monomial) != 0:
            g_k, s = reduce_step(g_k, rules, step.monomial, step.rule_index)
            g_steps.append(s)
    p = trace.end_precision
    assert f_k.subtract(g_k).truncate(p) == trace.end.truncate(p)
    return (f_k, g_k,
            ReductionTrace(f, tuple(f_steps), f_k, p),
            ReductionTrace(g, tuple(g_steps), g_k, p))


# -- membership / congruence ------------------------------------------------

@dataclass(frozen=True)
class Member:
    """f - g is generated by the rules below the working precision; the
    cofactors witness it."""
    cofactors: tuple[TruncatedSeries, ...]


@dataclass(frozen=True)
class NotMember:
    """A nonzero normal form below the precision: conclusive only when the
    rules were asserted to form a standard basis (unique normal forms)."""
    witness: TruncatedSeries


@dataclass(frozen=True)
class UnknownAtPrecision:
    """A nonzero residual without the standard-basis assumption: the
    division strategy proves nothing either way."""
    residual: TruncatedSeries


MembershipVerdict = Member | NotMember | UnknownAtPrecision


def congruence_test(f: TruncatedSeries, g: TruncatedSeries, rules: RuleSet,
                    precision: int,
                    assume_standard_basis: bool = False) -> MembershipVerdict:
    """Decide f = g modulo the generated ideal, below the precision.

    Normalises f - g.  A vanishing residual always yields Member (the
    congruence is witnessed by cofactors).  A surviving residual yields
    NotMember only under the caller's standard-basis assumption, otherwise
    UnknownAtPrecision.
    """
    trace = normalize(f.subtract(g), rules, precision)
    if trace.end.truncate(precision).known_zero():
        return Member(cofactors(trace, rules))
    if assume_standard_basis:
        return NotMember(trace.end)
    return UnknownAtPrecision(trace.end)


def ideal_membership(f: TruncatedSeries, rules: RuleSet, precision: int,
                     assume_standard_basis: bool = False) -> MembershipVerdict:
    return congruence_test(f, TruncatedSeries.zero(f.n), rules, precision,
                           assume_standard_basis)


# -- standard-basis falsification -------------------------------------------

def random_polynomial(rng: random.Random, n: int, max_degree: int,
                      max_terms: int = 4, zero_ok: bool = True) -> TruncatedSeries:
    """A reproducible random exact polynomial with small integer
    coefficients and total degree <= max_degree."""
    terms: dict[Monomial, Fraction] = {}
    for _ in range(rng.randint(0 if zero_ok else 1, max_terms)):
        d = rng.randint(0, max_degree)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        m = Monomial(tuple(exps))
        c = Fraction(rng.randint(-4, 4))
        terms[m] = terms.get(m, Fraction(0)) + c
    return TruncatedSeries(n, terms)


@dataclass(frozen=True)
class StandardBasisCounterexample:
    """A combination of the rules whose normal form is nonzero below the
    working precision: the rules cannot be a standard basis of the ideal
    they generate."""

    phase: str                   # "pairwise" or "random"
    trial: int                   # 1-based counter within the phase
    cofactors: tuple[TruncatedSeries, ...]
    combination: TruncatedSeries
    normal_form: TruncatedSeries


def falsify_standard_basis(rules: RuleSet, precision: int, trials: int,
                           seed: int, max_cofactor_degree: int = 3
                           ) -> Optional[StandardBasisCounterexample]:
    """Search for a combination of the rules that does not reduce to zero.

    Runs the deterministic leading-cancellation phase first (for each rule
    pair, multiply both onto the lcm of their leading monomials so the
    least leading terms cancel), then seeded random combinations.  None
    means no counterexample was found, which is inconclusive.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    r = len(rules)
    n = rules.n

    def check(qs: list[TruncatedSeries], phase: str, trial: int
              ) -> Optional[StandardBasisCounterexample]:
        combo = TruncatedSeries.zero(n)
        for q, rule in zip(qs, rules.rules):
            combo = combo.add(q.multiply(rule.body))
        if combo.truncate(precision).known_zero():
            return None
        try:
            trace = normalize(combo, rules, precision)
        except PrecisionUnattainableError:
            return None  # rule truncations make this combination untestable
        residual = trace.end.truncate(precision)
        if residual.known_zero():
            return None
        return StandardBasisCounterexample(phase, trial, tuple(qs), combo, residual)

    trial = 0
    for a in range(r):
        for b in range(a + 1, r):
            ra, rb = rules.rules[a], rules.rules[b]
            lcm = ra.leading_monomial.lcm(rb.leading_monomial)
            qa = TruncatedSeries.term(ra.leading_monomial.divides(lcm),
                                      1 / ra.leading_coefficient)
            qb = TruncatedSeries.term(rb.leading_monomial.divides(lcm),
                                      -1 / rb.leading_coefficient)
            qs = [TruncatedSeries.zero(n) for _ in range(r)]
            qs[a], qs[b] = qa, qb
            trial += 1
            found = check(qs, "pairwise", trial)
            if found is not None:
                return found

    rng = random.Random(seed)
    for t in range(1, trials + 1):
        qs = [random_polynomial(rng, n, max_cofactor_degree) for _ in range(r)]
        found = check(qs, "random", t)
        if found is not None:
            return found
    return None


# -- confluence probing ------------------------------------------------------

@dataclass(frozen=True)
class ConfluenceProbeReport:
    """Pairwise adic distances between the normal forms reached by
    different randomized strategies.  Under a standard basis every pair
    must lie within 2^(-precision); anything larger witnesses divergence."""

    precision: int
    seeds: tuple[int, ...]
    ends: tuple[TruncatedSeries, ...]
    pairwise: tuple[tuple[int, int, Fraction, bool], ...]

    @property
    def threshold(self) -> Fraction:
        return Fraction(1, 2 ** self.precision)

    @property
    def max_delta(self) -> Fraction:
        return max((d for _, _, d, _ in self.pairwise), default=Fraction(0))

    def divergence_witnesses(self) -> list[tuple[int, int, Fraction]]:
        return [(a, b, d) for a, b, d, _ in self.pairwise if d > self.threshold]


def confluence_probe(f: TruncatedSeries, rules: RuleSet, precision: int,
                     strategy_seeds: Sequence[int]) -> ConfluenceProbeReport:
    if not strategy_seeds:
        raise ValueError("strategy_seeds must be nonempty")
    ends = [normalize_random(f, rules, precision, s).end for s in strategy_seeds]
    pairs = []
    for a in range(len(ends)):
        for b in range(a + 1, len(ends)):
            d, ub = delta(ends[a], ends[b])
            pairs.append((strategy_seeds[a], strategy_seeds[b], d, ub))
    return ConfluenceProbeReport(precision, tuple(strategy_seeds), tuple(ends),
                                 tuple(pairs))


# -- attractivity -------------------------------------------------------------

@dataclass(frozen=True)
class AttractivityReport:
    """Distances to a fixed normal form along an arbitrary reduction walk;
    a violation is any step that moved strictly further away."""

    ok: bool
    steps_taken: int
    distances: tuple[Fraction, ...]   # delta to alpha before/after each step
    violation_step: Optional[int]     # 1-based, None when ok


def attractivity_check(f: TruncatedSeries, rules: RuleSet,
                       alpha: TruncatedSeries, steps: int,
                       seed: int = 0) -> AttractivityReport:
    """Walk up to `steps` random one-step reductions from f, checking that
    the distance to the normal form alpha never increases."""
    if reducible_monomials(alpha, rules):
        raise PreconditionFailedError("alpha contains a reducible monomial")
    rng = random.Random(seed)
    order = rules.order
    h = f
    dists = [delta(h, alpha)[0]]
    taken = 0
    for k in range(1, steps + 1):
        candidates = sorted(reducible_monomials(h, rules), key=order.key)
        if not candidates:
            break
        M = rng.choice(candidates)
        i = rng.choice(rules.dividing_rules(M))
        h, _ = reduce_step(h, rules, M, i)
        taken = k
        dists.append(delta(h, alpha)[0])
        if dists[-1] > dists[-2]:
            return AttractivityReport(False, taken, tuple(dists), k)
    return AttractivityReport(True, taken, tuple(dists), None)
