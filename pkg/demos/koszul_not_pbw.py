"""A Koszul algebra with no PBW basis under deglex, for a = 2."""

from __future__ import annotations

from skewkoszul import catalog
from skewkoszul.fileformat import render
from skewkoszul.koszul import bar_ext_table, hilbert_duality_check
from skewkoszul.rewriting import pbw_check

P = catalog.build("koszul_non_pbw", a=2)
print(render(P))
v = pbw_check(P)
print("pbw:", v.status, "witness:", v.witness)
T = bar_ext_table(P, 4, 4)
print(T.render())
print("duality:", hilbert_duality_check(P, 6).status)
