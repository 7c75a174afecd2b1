#!/usr/bin/env python3
"""Isometric pairs with the same Gauss map.

For kinds I and II a one-parameter family of profiles makes the helicoid
and its rotational partner share the Gauss map pointwise; both surfaces are
then hyperplanar and minimal.  For kind III the often-quoted pair (with a
constant third slot) is isometric but its Gauss maps differ -- although a
different gauge turns the partner into a translate of the helicoid itself,
so the difference is a property of the gauge, not of the kind.
"""
import math

from bour4 import (bour_partner, gauge_complete, gauss_residual, grid_for,
                   make_helicoid, pair_report, same_gauss_pair_I,
                   same_gauss_pair_II)

# kind I with x = u, pitch 1, family parameter c3 = 1/2
h1, r1 = same_gauss_pair_I("u", 1.0, 0.5, domain=(1.1, math.pi))
rep = pair_report(h1, r1, grid_for(h1, nu=17, nv=17))
print("kind I pair:", rep.verdicts)
print("  gauss residual", rep.gauss_residual, " max |H|", max(rep.max_mean_curvature))

# the limit c3 -> 1/lambda^2 degenerates to the right helicoid / catenoid-like pair
hr, rr = same_gauss_pair_I("u", 1.0, 1.0, domain=(1.5, 3.0))
print("right-helicoid limit: w == 0, partner 4th component "
      f"r(2) = {rr.r(2.0).v:.12f} (= asinh(sqrt(3)))")

# kind II needs a negative family parameter
h2, r2 = same_gauss_pair_II("u", 1.0, -0.5, domain=(0.2, 0.9))
rep2 = pair_report(h2, r2, grid_for(h2, nu=17, nv=17))
print("kind II pair:", rep2.verdicts)

# kind III: constant-third-slot gauge -> isometric, Gauss maps differ
h3 = make_helicoid("III", 1.0, {"x": "u", "z": "c", "w": "u"},
                   (0.75, math.pi), constants={"c": 0.0},
                   v_domain=(-math.pi, math.pi))
g3 = grid_for(h3, nu=17, nv=17)
differing = bour_partner(h3, gauge_complete(h3, "b", "0"))
print("kind III, b = 0 gauge: gauss residual",
      round(gauss_residual(h3, differing, g3), 3), "(differs)")
translate = bour_partner(h3, gauge_complete(h3, "a", "1"))
print("kind III, a = x'/w' gauge: gauss residual",
      gauss_residual(h3, translate, g3), "(the partner is a translate)")
