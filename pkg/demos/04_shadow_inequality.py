# coding: utf-8

# # Shadows of k-partite hypergraphs
#
# For a k-partite r-graph H, the normalized edge count (|H|/C(k,r))^(1/r) never
# exceeds the normalized shadow size (|shadow_i H|/C(k,r-i))^(1/(r-i)).  Both
# sides are compared after raising to integer powers, so equality is exact.

# In[1]:

from unicolor import complete_kpartite, random_kpartite, shadow
from unicolor.constructions import trial_rng
from unicolor.thresholds import ffk_sides

K, witness = complete_kpartite(3, [1, 1, 1, 1])
print("complete 3-graph on 4 vertices:", ffk_sides(K, 4, 1, witness))


# Random subgraphs of a k-partite host are strictly inside the bound unless
# they happen to be complete on singleton parts.

# In[2]:

rng = trial_rng(0, 0)
for p in (0.2, 0.5, 0.9):
    H, witness = random_kpartite(3, [2, 2, 3, 2], p, rng)
    lhs, rhs = ffk_sides(H, 4, 1, witness)
    print(f"p={p}: |H|={len(H):3d} |shadow|={len(shadow(H, 1)):3d}  {lhs} <= {rhs}: {lhs <= rhs}")
