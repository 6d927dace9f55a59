# coding: utf-8

# # Matched blocks, swaps and tangent weights
#
# A matched block is a run of rows in two columns whose column sums agree.
# Swapping its two columns is a move between tables of the same family.

# In[1]:

from bowbruhat import BinaryMatrix, MatchedBlock, minimal_decomposition

M = BinaryMatrix.from_text("01\n10\n11\n10\n10\n01\n11\n01\n00\n10\n01")
parts = minimal_decomposition(M, MatchedBlock(1, 2, 1, 11))
print([(b.i, b.j) for b in parts])


# Every move carries a weight ``a_q1/a_q0 h^d``.  With the identity
# cocharacter, a move is attractive when ``q1 > q0``.

# In[2]:

from bowbruhat import curve_digraph, enumerate_bcts, geometric_relation, secondary_relation

family = enumerate_bcts(((1, 1, 1, 1), (2, 2)))
g = curve_digraph(family, with_moves=True)
for arc in g.arcs:
    print(arc.source, "->", arc.target, arc.weight)


# The arc 0 -> 5 is a two-component pencil, not a single interchange, yet the
# closures agree.

# In[3]:

print(sorted({mv.pencil_dim for mv in g.moves}))
print(geometric_relation(family) == secondary_relation(family))


# A different cocharacter permutes which directions count as attractive.

# In[4]:

from bowbruhat import CocharacterSpec

flipped = geometric_relation(family, CocharacterSpec((2, 1)))
print(flipped.down_set(0))
