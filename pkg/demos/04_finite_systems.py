"""Finite abstract rewriting: decidable normal-form properties.

On a finite carrier every property of interest is decidable by search:
being normalising, the normal-form property, unique normal forms (as a
property of the equivalence and as reached by reduction), and classical
confluence.  The implications between them hold on every system, which
the library's test suite verifies exhaustively; here we just look at a
few instructive systems and run the valley-elimination procedure that
rewrites a conversion between normal forms into a single-peak one.
"""

from psrewrite import (
    check_properties,
    eliminate_valleys,
    format_conversion,
    normal_forms,
    parse_ars_system,
    parse_conversion,
)

EXAMPLES = {
    "confluent join":  "n=3\n0 -> 2\n1 -> 2\n",
    "peak, two normal forms": "n=3\n0 -> 1\n0 -> 2\n",
    "self loop": "n=2\n0 -> 0\n",
    "cycle with exit": "n=3\n0 -> 1\n1 -> 0\n1 -> 2\n",
}

for name, text in EXAMPLES.items():
    sys_ = parse_ars_system(text)
    props = check_properties(sys_)
    print(f"{name:<24} normal forms {sorted(normal_forms(sys_))}")
    for key, value in vars(props).items():
        print(f"    {key:<20} {value}")
print()

print("valley elimination:")
sys_ = parse_ars_system("n=4\n1 -> 0\n1 -> 2\n3 -> 2\n3 -> 0\n2 -> 0\n")
conv = parse_conversion("0 <- 1 -> 2 <- 3 -> 0")
print("  system edges: 1->0 1->2 3->2 3->0 2->0; normal form:", sorted(normal_forms(sys_)))
print("  conversion  :", format_conversion(conv),
      f"({len(conv.valley_indices())} valley at element 2)")
out = eliminate_valleys(sys_, conv)
print("  eliminated  :", format_conversion(out),
      f"({len(out.valley_indices())} valleys, endpoints equal: {out.start == out.end})")
