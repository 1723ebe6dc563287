"""Jordan plane from extension data to a Koszul report."""

from __future__ import annotations

from skewkoszul import catalog
from skewkoszul.fileformat import render
from skewkoszul.koszul import koszul_report
from skewkoszul.presentation import hilbert
from skewkoszul.skewpbw import classify, emit_presentation, validate_extension

E = catalog.build("jordan_plane")
print(render(E))
print(validate_extension(E).render())
print(classify(E).render())
P = emit_presentation(E)
print(render(P))
print("hilbert:", hilbert(P, 8))
print(koszul_report(P).render())
