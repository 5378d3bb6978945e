"""Tour of greedy expansions, Parry classification, and alphabet bounds.

Walks through the numeration layer on the shipped preset bases: computes
d_beta(1) exactly, classifies each base, checks digit-sequence
admissibility, and prints every alphabet-cardinality bound next to the
alphabet the explicit algorithms actually attain.

Run:  python demos/expansions_and_bounds.py
"""

from betapar import (
    QuotientValue,
    base_from_spec,
    block_impossible_unit_conjugate,
    block_lower_bound_nonsimple,
    block_lower_bound_simple,
    canonical_alphabet,
    classify_parry,
    greedy_expand_ge1,
    is_admissible,
    lower_bound_1block,
    parse_eventually_periodic,
    pf_sufficient,
    quasi_greedy,
    renyi_dbeta,
    upper_bound_corollaries,
)


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Greedy integer expansions in the Fibonacci base")
fib = base_from_spec("fibonacci")
for n in range(1, 9):
    res = greedy_expand_ge1(QuotientValue.from_int(fib, n), fib)
    print("  %d = %s" % (n, res.string))

section("d_beta(1) and classification across presets")
presets = ["fibonacci", "tribonacci", "dbonacci:4", "quadratic-plus:4,2",
           "quadratic-plus:5,3", "quadratic-minus:3,1", "quadratic-minus:4,2"]
for spec in presets:
    base = base_from_spec(spec)
    kind, d = classify_parry(base)
    print("  %-20s d_beta(1) = %-8s %-11s %s  alphabet %s"
          % (spec, d, kind + " Parry,", pf_sufficient(d), canonical_alphabet(base)))

section("Admissibility under the quasi-greedy expansion (Fibonacci)")
dstar = quasi_greedy(renyi_dbeta(fib))
print("  d*_beta(1) = %s" % dstar)
for text in ["101", "11", "1001", "(10)"]:
    s = parse_eventually_periodic(text)
    print("  %-6s admissible: %s" % (text, is_admissible(s, dstar)))

section("Bounds: what 1-block addition needs vs what blocks achieve")
for spec in ["dbonacci:2", "dbonacci:3", "dbonacci:4", "dbonacci:5"]:
    base = base_from_spec(spec)
    d = renyi_dbeta(base)
    one = lower_bound_1block(base.poly)
    m = upper_bound_corollaries(d)
    print("  %-12s 1-block cardinality >= %d, while blocks get M in [%d, %d] "
          "(alphabet {0..%d})" % (spec, one, m[0], m[1], m[1]))

section("Quadratic bases: lower bounds are attained")
for spec, bound_fn in [("quadratic-plus:4,2", block_lower_bound_simple),
                       ("quadratic-minus:4,2", block_lower_bound_nonsimple)]:
    base = base_from_spec(spec)
    d = renyi_dbeta(base)
    print("  %-20s d_beta(1) = %-5s block cardinality bound %d"
          % (spec, d, bound_fn(d)))

section("A base where block parallel addition is impossible")
salem = [1, -1, -1, -1, 1]
print("  X^4-X^3-X^2-X+1 (two conjugates on the unit circle):",
      block_impossible_unit_conjugate(salem))
print("  X^2-X-1 (Pisot):", block_impossible_unit_conjugate([1, -1, -1]))
