"""
Enveloping dialgebra of a small Leibniz algebra
===============================================

Build the relations, check every composition, and count the normal diwords.
"""

from dialgebra import (LeibnizAlgebra, check_gsb, check_leibniz, cross_check, irr_enumerate,
                       leibniz_enveloping, pbw_dimension)

# two generators with a single nonzero bracket [a, a] = b
L = LeibnizAlgebra(["a", "b"], {("a", "a"): {"b": 1}}, i0=["b"])
print(check_leibniz(L).valid)

S = leibniz_enveloping(L)
for rel in S.relations:
    print("  ", S.format(rel))

# every composition reduces to zero
report = check_gsb(S)
print(report.passed, len(report.results), "compositions")

# the normal diwords of length 3
words = irr_enumerate(S, 3)
print([S.alphabet.format_diword(u) for u in words if len(u) == 3])

# counts agree with the exact rank computation and with the PBW formula
res = cross_check(S, 5)
print(res.irr, res.oracle, res.agree)
print([pbw_dimension(L, d) for d in range(1, 6)])
