"""Stabilized braids: a second family of non-simple minimizers.

Stabilizing the basic cable example k times gives a knot in class k+4 of
L(p,q) whenever p >= 2q(k+4).  Its minimal surface is assembled from
three catalogued surfaces; after capping boundary components its
complexity equals the (1,k+4)-torus-knot norm on the nose, certifying the
stabilized braid as a genus minimizer.
"""

from lensgenus import (
    BASE_SURFACES,
    LensSpace,
    StabFamily,
    stab_coefficients,
    stab_norms,
    stab_verdict,
)

print("catalogued surfaces (complexity, boundary on K0 / axis / gamma):")
for surface in BASE_SURFACES:
    b = surface.boundary
    print(
        f"  {surface.name}: chi_minus = {surface.chi_minus}, "
        f"({b.on_K0.mu_coeff},{b.on_K0.lambda_coeff}) / "
        f"({b.on_L2.mu_coeff},{b.on_L2.lambda_coeff}) / "
        f"({b.on_gamma.mu_coeff},{b.on_gamma.lambda_coeff})"
    )

for p, q, k in [(10, 1, 1), (30, 1, 2), (16, 1, 4)]:
    fam = StabFamily(LensSpace(p, q), k)
    c0, cg, cf = stab_coefficients(fam)
    norms = stab_norms(fam)
    v = stab_verdict(fam)
    print(f"\n(p,q,k) = ({p},{q},{k}):")
    print(f"  surface combination: {c0}*F0 + {cg}*Fgamma + {cf}*F")
    print(f"  chi of the combined surface: {norms.chi_Fk}")
    print(f"  after capping: {norms.chi_capped} = torus-knot norm {v.torus_chi}")
    print(f"  theta(class {v.homology_class}) = {v.theta}, certified: {v.certified_minimizer}")
