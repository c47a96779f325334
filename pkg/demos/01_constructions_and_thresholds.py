# coding: utf-8

# # Two colorings that refuse to agree
#
# The family H_{k,r}(alpha, m) is a k-partite r-graph built from k-2 blocks of
# size floor(alpha*m) plus two split blocks whose halves are never joined by an
# edge.  Swapping the colors of one pair of halves gives a second proper
# coloring that is not a relabeling of the first.

# In[1]:

from fractions import Fraction

from unicolor import are_equivalent, enumerate_classes, hkr, is_proper, min_positive_degree, phase_point, phi

H, psi1, psi2 = hkr(3, 3, 1, 1)
print(H)
print("edges:", H.edges)
print("psi1 :", psi1.assignment, "proper:", is_proper(H, psi1))
print("psi2 :", psi2.assignment, "proper:", is_proper(H, psi2))
print("equivalent?", are_equivalent(psi1, psi2))


# The enumerator lists every coloring class up to renaming of colors.

# In[2]:

for c in enumerate_classes(H, 3):
    print(c.assignment)


# # How close to the threshold do these get?
#
# With alpha = 1 the minimum positive codegree is (k-r+1)m on (k+2)m vertices;
# with alpha = 3 it is (3k-3r+1)m on (3k-2)m vertices.  Whichever ratio is
# larger is the threshold phi(k, r), and the switch happens at k = (4r-2)/3.

# In[3]:

r = 6
print(f"phase point for r={r}: {phase_point(r)}")
for k in range(6, 12):
    ratios = {}
    for alpha in (1, 3):
        G, _, _ = hkr(k, r, alpha, 1)
        ratios[alpha] = Fraction(min_positive_degree(G, r - 1), G.n)
    print(f"k={k:2d}  alpha=1: {str(ratios[1]):>6}  alpha=3: {str(ratios[3]):>6}  phi: {phi(k, r)}")
