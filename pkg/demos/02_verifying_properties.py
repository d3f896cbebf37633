"""Frameproof, separable, and strongly separable: three grades of safety.

For a coalition bound t, a code is t-frameproof when no coalition can forge
an innocent user's word; it is 2-separable when distinct small subsets have
distinct descendants; and strongly 2-separable when a descendant pins its
coalition exactly.  Frameproof implies strongly separable implies
separable, and both gaps are witnessed by the two codes below.
"""

from sepcode import (
    Code,
    desc_cap_bound,
    forbidden_type_scan,
    is_fpc,
    is_sc,
    is_ssc,
    is_ssc_naive,
    shortened_sc_check,
)

four = Code.from_words([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], q=2)
five = Code.from_words(
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], q=2
)

print("the (3, 4, 2) code:")
verdict = is_fpc(four, 2)
print("  2-frameproof?", verdict.holds)
print("  witness:", verdict.witness)  # {c2, c3} captures c1
print("  strongly 2-separable?", is_ssc(four, 2).holds)
print("  (so tracing works even though it is not frameproof)")
print()

print("the (3, 5, 2) code:")
print("  2-separable?", is_sc(five, 2).holds)
verdict = is_ssc(five, 2)
print("  strongly 2-separable?", verdict.holds)
print("  witness:", verdict.witness)  # {c1, c5} vs {c2, c3, c4}
print()

# The exponential check straight from the definition agrees with the fast
# delete-one criterion; it is the oracle the test suite compares against.
print("naive oracle agrees:", is_ssc_naive(five, 2).holds == verdict.holds)
print()

# Length-3 codes enjoy two specialized criteria.
print("length-3 criteria on the (3, 5, 2) code:")
print("  shortened-overlap separability check:", shortened_sc_check(five).holds)
scan = forbidden_type_scan(five)
print("  forbidden-pattern scan:", scan.holds, "->", scan.witness)
print("  largest captured set over pairs:", desc_cap_bound(five))
print("  (any value <= 3 would already guarantee strong 2-separability)")
