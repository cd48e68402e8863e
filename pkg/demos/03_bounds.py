"""Both sides of the fractional Ostrowski-type bounds over the corpus.

Run: python demos/03_bounds.py
"""
from fracq import HolderPair, get_density, get_function, verify_t1, verify_t2, verify_t3, verify_t4
from fracq.sweep import SweepConfig, run_sweep, summarize

f = get_function("exp")
hp = HolderPair.from_p(2)
for r in (verify_t1(f, 0.5, hp), verify_t2(f, 0.5), verify_t3(f, get_density("linear"), 0.5, hp),
          verify_t4(f, get_density("linear"), 0.5)):
    print(f"{r.theorem.value:<18} lhs={r.lhs:.6f}  rhs={r.rhs:.6f}  ratio={r.ratio:.3f}")

# The weighted sup-norm bound as printed subtracts (b-a)/(alpha+1); for
# alpha < 1 and the uniform density that makes the right side negative.
f, u = get_function("linear"), get_density("uniform")
for alpha in (0.0, 0.5, 1.0, 2.0):
    lit = verify_t4(f, u, alpha, "literal")
    cor = verify_t4(f, u, alpha, "corrected")
    print(f"alpha={alpha}: lhs={lit.lhs:.4f}  printed rhs={lit.rhs:+.4f} ({'ok' if lit.holds else 'VIOLATED'})"
          f"  corrected rhs={cor.rhs:.4f}")

reports = run_sweep(SweepConfig())
n, v, deficit = summarize(reports)
print(f"\ndefault sweep: {n} checks, {v} violations, max deficit {deficit:.1e}")
