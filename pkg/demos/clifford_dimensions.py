"""
Clifford dialgebras
===================

Total dimension of the Clifford dialgebra of the identity form in 1, 2 and 3 variables.
"""

from dialgebra import QQ, SymmetricForm, check_gsb, clifford, irr_enumerate

for n in (1, 2, 3):
    identity = [[QQ(int(i == j)) for j in range(n)] for i in range(n)]
    S = clifford(SymmetricForm(identity, QQ))
    assert check_gsb(S).passed
    # nothing survives past length n + 1, so degree n + 2 is a safe bound
    words = irr_enumerate(S, n + 2)
    print(n, len(S.relations), "relations,", len(words), "normal diwords")
