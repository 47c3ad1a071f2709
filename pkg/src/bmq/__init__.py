"""Biquandle module quivers and natural path polynomials.

Colorings of classical, virtual and marked graph diagrams by finite
biquandles, bead-coloring modules over Z_m, coloring quivers weighted by
those modules, and the path polynomial read off the identity arrows.
"""

__version__ = "0.1.0"
