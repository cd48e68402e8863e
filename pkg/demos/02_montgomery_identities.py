"""Montgomery identities and the fractional master identities, as residuals.

Run: python demos/02_montgomery_identities.py
"""
from fracq import (
    catalog_densities,
    catalog_functions,
    get_density,
    get_function,
    identity_z1_sides,
    identity_z_sides,
    interchange_lemma_residuals,
    montgomery_residual,
    peano_kernel,
    weighted_montgomery_residual,
    UNIT,
)

print("Peano kernel at t=0.5:", [peano_kernel(UNIT, 0.5, s) for s in (0.0, 0.25, 0.5, 0.75, 1.0)])

worst = max(abs(montgomery_residual(f, t)) for f in catalog_functions() for t in (0.1, 0.5, 0.9))
print(f"plain Montgomery, worst residual over the corpus: {worst:.2e}")

worst = max(abs(weighted_montgomery_residual(f, d, 0.4))
            for f in catalog_functions() for d in catalog_densities())
print(f"weighted Montgomery, worst residual: {worst:.2e}")

exp = get_function("exp")
print("order-of-integration lemmas for exp, alpha=0.5:",
      ["%.1e" % r for r in interchange_lemma_residuals(exp, 0.5, get_density("linear"))])

print("\n alpha   master lhs          master rhs          weighted lhs        weighted rhs")
for alpha in (0, 0.25, 0.5, 1, 2, 3):
    z = identity_z_sides(exp, alpha)
    z1 = identity_z1_sides(exp, get_density("trunc_exp"), alpha)
    print(f" {alpha:<6}  {z[0]: .15f}  {z[1]: .15f}  {z1[0]: .15f}  {z1[1]: .15f}")
