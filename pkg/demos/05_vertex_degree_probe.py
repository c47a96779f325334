# coding: utf-8

# # Which alpha maximizes the positive i-degree?
#
# For i < r-1 the threshold is only bounded in general.  The probe scans a grid
# of alpha values and reports the exact ratio delta_i^+ / n^(r-i) for each.
# For 3-graphs and vertex degrees the best grid point is alpha = 2, where the
# ratio is exactly 1/18.

# In[1]:

from fractions import Fraction

from unicolor import conjecture_probe, phi_upper

alphas = [Fraction(j, 4) for j in range(4, 17)]
report = conjecture_probe(3, 3, 1, alphas, m=4)
for row in report.measured["ratios"]:
    print(f"alpha={str(row['alpha']):>4}  n={row['n']:3d}  ratio={row['ratio']}")
print("best:", report.measured["best_alpha"], report.measured["best_ratio"])
print("general upper bound:", phi_upper(3, 3, 1))
