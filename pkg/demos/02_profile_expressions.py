#!/usr/bin/env python3
"""Profile components as text, evaluated with exact derivatives.

Curve components like x(u), w(u) are parsed once and then evaluated as
second-order jets (value, u-derivative, second derivative) by forward-mode
propagation, so the curvature formulas downstream never see finite
differences.
"""
from bour4 import eval_jet, parse, to_source
from bour4.errors import EvalDomainError, ExprSyntaxError

src = "asinh(sqrt((u^2 - 1)/2)) - atan(sqrt((u^2 - 1)/(u^2 + 1)))"
w = parse(src)
print("parsed:", to_source(w))

for u in (1.5, 2.0, 3.0):
    j = eval_jet(w, u)
    print(f"  w({u}) = {j.v:+.12f}   w'({u}) = {j.d1:+.12f}   w''({u}) = {j.d2:+.12f}")

# named constants are bound at evaluation time, not baked into the tree
g = parse("sqrt((1 - c3*lam^2)/c3) * asinh(sqrt(c3*(u^2 - lam^2)))")
print("with lam=1, c3=1/4:", eval_jet(g, 2.0, {"lam": 1.0, "c3": 0.25}).v)

# errors carry positions / the offending sub-expression
try:
    parse("2 +* u")
except ExprSyntaxError as exc:
    print("syntax error:", exc)
try:
    eval_jet(parse("log(u - 5)"), 2.0)
except EvalDomainError as exc:
    print("domain error:", exc)
