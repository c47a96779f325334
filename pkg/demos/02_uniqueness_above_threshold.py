# coding: utf-8

# # Above the threshold every coloring is the same coloring
#
# Start from a complete k-partite r-graph and delete random edges, refusing any
# deletion that isolates a vertex or drops a positive codegree to phi(k,r)*n or
# below.  Whatever survives should have exactly one coloring class.

# In[1]:

from collections import Counter

from unicolor import hkr, min_positive_degree, phi, sample_kpartite_above, uniqueness_status

k, r, sizes = 3, 3, (3, 4, 4)
threshold = phi(k, r)
statuses = Counter()
for H in sample_kpartite_above(k, r, sizes, threshold, trials=200, seed=1):
    statuses[uniqueness_status(H, k).value] += 1
print(f"threshold {threshold}, n = {sum(sizes)}")
print(dict(statuses))


# # Exactly at the threshold the conclusion fails
#
# The binding construction sits on phi(k,r)*n, not above it, and has at least
# two coloring classes.

# In[2]:

for k, r in [(3, 3), (4, 3), (8, 6)]:
    alpha = 1 if 3 * k < 4 * r - 2 else 3
    H, _, _ = hkr(k, r, alpha, 1)
    delta = min_positive_degree(H, r - 1)
    print(f"(k,r)=({k},{r}) alpha={alpha}: codegree {delta} = {phi(k, r)} * {H.n}; "
          f"{uniqueness_status(H, k).value}")


# The same experiments, as reproducible reports:

# In[3]:

from unicolor.verify import verify_boundary, verify_main_theorem

print(verify_main_theorem(3, 3, 9, 100, seed=42).to_json(indent=1))
print(verify_boundary(4, 3, 2).verdict)
