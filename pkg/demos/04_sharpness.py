"""How close do simple function families get to each bound?

Run: python demos/04_sharpness.py
"""
from fracq import FAMILIES, HolderPair, get_density, maximize_ratio

hp = HolderPair.from_p(2)
print("classical Ostrowski, f = c t, x = 1:",
      maximize_ratio("OstrowskiClassical", FAMILIES["linear"], x=1.0, budget=200).best_ratio)

for alpha in (0.0, 0.5, 2.0):
    for name in ("quadratic", "cubic", "exp"):
        t1 = maximize_ratio("T1_Eq9", FAMILIES[name], alpha, hp, budget=400)
        t4 = maximize_ratio("T4_Eq14_corrected", FAMILIES[name], alpha, d=get_density("linear"), budget=400)
        print(f"alpha={alpha:<4} {name:<10} T1 best ratio {t1.best_ratio:.4f}   "
              f"T4 corrected best ratio {t4.best_ratio:.4f}")
