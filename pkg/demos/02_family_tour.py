"""
The solvable example family
===========================

A (2n+1)-dimensional Lie group carries the structure studied here when
its algebra has the single bracket row [x_i, x_0] = lambda_i x_0: the
endomorphism phi rotates the pairs (x_i, x_{i+n}), xi = x_0 is the
structure vector, and the metric is diag(1, ..., 1, -1, ..., -1) with
n+1 plus signs.  The family is parametrized by 2n rationals.
"""
from fractions import Fraction

from norden import (
    FamilyParams,
    associated_metric,
    generate_family,
    is_solvable,
    signature,
    validate_structure,
)

# The worked 3-dimensional member: n = 1, lambda = (2, 3).
model = generate_family(FamilyParams(1, (2, 3)))
print("name:", model.name)
print("dim :", model.dim)
print("phi :", model.phi.components.tolist())
print("g   :", model.g.components.tolist())

# The nonzero brackets sit in the x_0 column: [x_1, x_0] = 2 x_0 and
# [x_2, x_0] = 3 x_0 appear as structure constants c[0, i, 0].
c = model.algebra.c
print("[x1, x0] coefficients:", [c[k, 1, 0] for k in range(3)])
print("[x2, x0] coefficients:", [c[k, 2, 0] for k in range(3)])

# Structure validation checks every axiom as an exact identity:
# phi^2 = -Id + eta (x) xi, eta(xi) = 1, the metric compatibility
# g(phi x, phi y) = -g(x, y) + eta(x) eta(y), antisymmetry, Jacobi, ...
report = validate_structure(model)
print("validation:", "ok" if report.ok else str(report))

# The algebra is solvable: its derived series terminates.
print("solvable:", is_solvable(model.algebra))

# Both the metric and its associated metric g~(x, y) = g(x, phi y)
# + eta(x) eta(y) have signature (n+1, n).
print("signature g :", signature(model.g))
print("signature g~:", signature(associated_metric(model)))

# Parameters can be arbitrary rationals, and n can grow: here a
# 7-dimensional member with fractional lambdas.
big = generate_family(
    FamilyParams(3, (Fraction(1, 2), -2, 0, Fraction(7, 3), 1, Fraction(-5, 4)))
)
print()
print("7-dimensional member:", big.name)
print("validation:", "ok" if validate_structure(big).ok else "violations!")
print("signature g :", signature(big.g))
print("signature g~:", signature(associated_metric(big)))
