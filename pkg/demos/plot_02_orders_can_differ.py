# coding: utf-8

# # When corner sums say yes and interchanges say no
#
# On most small families the two orders agree.  This 6x6 pair is a place
# where they do not.

# In[1]:

from bowbruhat import BinaryMatrix, compare_relations, enumerate_bcts, leq_bruhat
from bowbruhat import bruhat_relation, secondary_relation

M1 = BinaryMatrix.from_text("100000\n101110\n111110\n000110\n000100\n000111")
M2 = BinaryMatrix.from_text("000100\n110110\n101111\n100100\n000010\n001110")
print("margins:", M1.margins)
print("corner sums put M1 below M2:", leq_bruhat(M1, M2))


# In[2]:

family = enumerate_bcts(M1.margins)
sec = secondary_relation(family)
print(len(family), "members")
print("interchanges reach M1 from M2:", sec.leq(family.index[M1], family.index[M2]))

cmp = compare_relations(bruhat_relation(family), sec, limit=5)
print("pairs only in the corner-sum order:", cmp.count_only_first)
print("pairs only in the interchange order:", cmp.count_only_second)
