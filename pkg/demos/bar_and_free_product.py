"""
Bar units and free products
===========================

Adjoin a bar unit to a tiny table, then glue two one-generator tables together.
"""

from dialgebra import MultiplicationTable, bar_extension, check_gsb, free_product, irr_enumerate
from dialgebra import normal_form

T = MultiplicationTable(["p", "q"], dashv={("p", "p"): {"q": 1}})
B = bar_extension(T)
print(B.alphabet.names, check_gsb(B).passed)

# the unit acts as identity on the correct side and kills the ideal part
for text in ("e ^p - ^p", "^p e - ^p", "^e q", "q ^e"):
    rem, _ = normal_form(B.parse(text), B)
    print(f"{text:12} -> {B.format(rem)}")

# the free product of two trivial one-generator tables
S, layout = free_product(MultiplicationTable(["x"]), MultiplicationTable(["y"]))
print(check_gsb(S).passed)
words = irr_enumerate(S, 4)
for d in range(1, 5):
    print(d, [S.alphabet.format_diword(u) for u in words if len(u) == d])

# every normal diword alternates between the two factors
print(all(layout.is_basis_word(u) for u in words))
