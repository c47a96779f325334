# coding: utf-8

# # Quasi-sunflowers
#
# On an ordered vertex list (v_1, ..., v_m) the r-uniform quasi-sunflower has
# q = floor((m-1)/(r-1)) disjoint petals through v_m, plus one tail edge made
# of the last r vertices.  Stacking them for every prefix length covers every
# pair, which forces any proper coloring to use m distinct colors.

# In[1]:

from unicolor import build_nested_sunflowers, build_quasi_sunflower, enumerate_classes

for m in (5, 6, 7):
    print(m, build_quasi_sunflower(3, m).edges)


# In[2]:

H = build_nested_sunflowers(3, 7)
cover = H.pair_matrix()[1:, 1:]
print("edges:", len(H))
print("pairs covered:", int(cover.sum()) // 2, "of", 7 * 6 // 2)
print("classes with 7 colors:", [c.assignment for c in enumerate_classes(H, 7)])
