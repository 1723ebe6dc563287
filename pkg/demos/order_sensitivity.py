"""The same algebra is PBW under one generator order and not under another."""

from __future__ import annotations

from skewkoszul import catalog
from skewkoszul.rewriting import pbw_check

P = catalog.build("remark_order_algebra")
for order in (["x", "y", "z"], ["z", "x", "y"]):
    v = pbw_check(P, order)
    print("<".join(order), v.status, "witness:", v.witness)
