#!/usr/bin/env python3
"""Vectors and 2-vectors of Minkowski 4-space.

The inner product <x,y> = x1 y1 + x2 y2 + x3 y3 - x4 y4 splits vectors into
spacelike / timelike / lightlike.  Oriented planes live in the 6-dimensional
space of 2-vectors, where the induced product has three minus signs.
"""
from bour4 import (Vec4, bivector_dot, causal_character, minkowski_dot, wedge,
                   BIVECTOR_SIGNATURE)
from bour4.lorentz import XI3, XI4

x = Vec4(1, 2, 0, 1)
y = Vec4(0, 1, 1, 3)
print("x . y =", minkowski_dot(x, y))

for v in [Vec4(1, 0, 0, 0), Vec4(0, 0, 0, 1), Vec4(0, 0, 3, 3)]:
    print(f"{tuple(v)} is {causal_character(v).value}")

# the null pair spanning the e3/e4 plane: both null, pairing -1
print("xi3.xi3 =", minkowski_dot(XI3, XI3), " xi3.xi4 =", minkowski_dot(XI3, XI4))

# 2-vectors: the wedge of two vectors, and the determinant identity
B = wedge(x, y)
print("x ^ y =", tuple(B))
print("signature of the 2-vector space:", BIVECTOR_SIGNATURE)

a, b = Vec4(1, 0, 1, 0), Vec4(0, 1, 0, 1)
lhs = bivector_dot(wedge(a, b), wedge(x, y))
rhs = (minkowski_dot(a, x) * minkowski_dot(b, y)
       - minkowski_dot(a, y) * minkowski_dot(b, x))
print("  <a^b, x^y> =", lhs, " det of pairwise dots =", rhs)
