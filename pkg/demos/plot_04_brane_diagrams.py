# coding: utf-8

# # Brane diagrams
#
# ``/`` is an NS5 brane, ``\`` a D5 brane, and the numbers between them are
# D3 multiplicities.

# In[1]:

from bowbruhat import charges, format_diagram, parse_diagram, separate

D = parse_diagram("/2\\2/2\\4/3/3/4\\3/2\\2\\")
print(charges(D))


# Hanany-Witten moves keep the charges fixed.  ``separate`` pushes every NS5
# brane to the left and reports the positions it moved through.

# In[2]:

S, steps = separate(D)
print(format_diagram(S))
print(len(steps), "moves")


# Tie diagrams are in bijection with the tables of the charge family.

# In[3]:

from bowbruhat import bct_to_tie, enumerate_bcts, enumerate_tie_diagrams, tie_to_bct

ties = enumerate_tie_diagrams(D)
print(len(ties), len(enumerate_bcts(charges(D))))
T = ties[0]
M = tie_to_bct(D, T)
print(T.sorted())
print(M.to_text())
print(bct_to_tie(D, M) == T)
