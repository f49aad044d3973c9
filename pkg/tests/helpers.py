"""Shared generators for seeded random rewriting instances."""

from psrewrite import DEGLEX, RuleSet, TruncatedSeries, random_polynomial


def random_instance(rng, exact_input=True):
    """A reproducible (f, rules, precision) triple with n <= 3, r <= 3,
    p <= 6 and exact nonzero rules."""
    n = rng.randint(1, 3)
    r = rng.randint(1, 3)
    p = rng.randint(2, 6)
    bodies = []
    while len(bodies) < r:
        b = random_polynomial(rng, n, max_degree=3, zero_ok=False)
        if not b.known_zero():
            bodies.append(b)
    f = random_polynomial(rng, n, max_degree=4)
    if not exact_input and rng.random() < 0.5:
        f = f.truncate(rng.randint(p, 8))
    return f, RuleSet.from_series(bodies, DEGLEX, n), p


def combination(qs, rules):
    """sum q_i * s_i over the rule set."""
    out = TruncatedSeries.zero(rules.n)
    for q, rule in zip(qs, rules.rules):
        out = out.add(q.multiply(rule.body))
    return out
