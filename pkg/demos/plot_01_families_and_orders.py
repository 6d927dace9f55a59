# coding: utf-8

# # Families and their two combinatorial orders
#
# A binary contingency table is a 0/1 matrix with fixed row and column sums.
# We enumerate one small family and compare the corner-sum order with the
# order generated by 2x2 interchanges.

# In[1]:

from bowbruhat import bruhat_relation, enumerate_bcts, hasse, secondary_relation

family = enumerate_bcts(((2, 1, 2), (2, 1, 2)))
print(len(family), "members")
for a, M in enumerate(family):
    print(a, M.to_text().replace("\n", " "))


# Both relations are stored as bitsets: bit b of ``reach[a]`` means member b
# sits weakly below member a.

# In[2]:

b, s = bruhat_relation(family), secondary_relation(family)
print("orders agree:", b == s)
H = hasse(s)
print("covers (upper, lower):", H.sorted_edges())
print("levels:", H.levels())


# The DOT text can be piped straight into graphviz.

# In[3]:

from bowbruhat.export import to_dot

print(to_dot(H))
