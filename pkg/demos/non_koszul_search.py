"""Search pairs of quadratic monomial-binomial relations for off-diagonal Ext."""

from __future__ import annotations

from itertools import combinations

from skewkoszul.freealg import FieldSpec, FreeAlgebra, GeneratorOrder
from skewkoszul.koszul import bar_ext_table, diagonal_check
from skewkoszul.presentation import Presentation

R = FreeAlgebra(FieldSpec.GF(), GeneratorOrder(("x", "y", "z")))
names = "xyz"
squares = [f"{a}*{b}" for a in names for b in names]
candidates = squares + [f"{u} - {v}" for u, v in combinations(squares, 2)]

for rels in combinations(candidates, 2):
    P = Presentation(R, tuple(R.parse(r) for r in rels))
    v = diagonal_check(bar_ext_table(P, 3, 4))
    if v.status == "Fail":
        print("non-Koszul:", rels, "witness", v.witness)
        break
