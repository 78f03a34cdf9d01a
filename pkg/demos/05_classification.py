"""
Class membership and exact identities
=====================================

Two classes are decided exactly: the parallel class (F = 0) and the
pure eta-omega class.  On the pure class a battery of identities ties
the structure tensors to the curvature; each is verified at literal
rational equality and reported with a verdict.
"""
from fractions import Fraction

from norden import (
    FamilyParams,
    fundamental_tensor,
    generate_family,
    heisenberg_model,
    is_f0,
    is_f11,
    is_isotropic_kahler,
    levi_civita,
    verify_identities,
)

# --- a scan across the parameter space -------------------------------------
# is_isotropic_kahler is true exactly when the lambda balance
# sum(lambda_k^2 - lambda_{k+n}^2) vanishes: the indefinite metric lets
# a nonzero nabla phi have zero square norm.
print("lambda     F=0    pure   isotropic")
for lam in ((0, 0), (2, 3), (1, 1), (Fraction(3, 2), Fraction(3, 2)), (3, -3)):
    model = generate_family(FamilyParams(1, lam))
    conn = levi_civita(model)
    f = fundamental_tensor(model, conn)
    flags = (
        is_f0(model, f),
        is_f11(model, f),
        is_isotropic_kahler(model, conn),
    )
    shown = ",".join(str(v) for v in lam)
    print(f"{shown:10s} {flags[0]!s:6s} {flags[1]!s:6s} {flags[2]!s}")

# Note (1, 1): the structure is not parallel (F != 0) yet both square
# norms vanish — isotropic but not parallel, the interesting middle.

# --- the identity battery ---------------------------------------------------
model = generate_family(FamilyParams(1, (2, 3)))
verdicts = verify_identities(model)
print()
print("identity verdicts on lambda = (2, 3):")
for name, verdict in verdicts.items():
    if verdict.applicable:
        mark = "pass" if verdict.passed else "FAIL"
    else:
        mark = "n/a "
    print(f"  [{mark}] {name}")

# --- a model outside the pure class ----------------------------------------
# The Heisenberg-type control model is a valid structure whose F is not
# carried by eta and omega alone: the pure-class identities are
# reported as inapplicable rather than silently skipped or failed.
heis = heisenberg_model()
conn = levi_civita(heis)
f = fundamental_tensor(heis, conn)
print()
print("Heisenberg control: pure class =", is_f11(heis, f))
verdicts = verify_identities(heis)
inapplicable = [n for n, v in verdicts.items() if not v.applicable]
print("inapplicable identities:", ", ".join(inapplicable))
unconditional = [n for n, v in verdicts.items() if v.applicable]
print("still checked:", ", ".join(unconditional))
