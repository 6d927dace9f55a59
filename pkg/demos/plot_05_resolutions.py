# coding: utf-8

# # Column resolutions
#
# Resolving column k with split (a, b) replaces it by two adjacent columns
# whose sums are a and b and which never share a row.

# In[1]:

from bowbruhat import BinaryMatrix, ChargeResolution, column_resolutions, merge_columns

M = BinaryMatrix.from_text("010\n001\n110\n011")
for R in column_resolutions(M, ChargeResolution(2, 2, 1)):
    print(R.matrix.to_text(), "\n")
    assert merge_columns(R) == M


# Splitting every column into ones gives the maximal resolutions, one for
# each way of ordering the 1s inside each column.

# In[2]:

from bowbruhat import maximal_resolutions

for R in maximal_resolutions(BinaryMatrix.from_text("10\n01\n11")):
    print(R.to_text().replace("\n", " "))


# The order upstairs decides the order downstairs: compare the batched
# compatibility relation with the secondary relation.

# In[3]:

from bowbruhat import enumerate_bcts, secondary_relation
from bowbruhat.resolution import all_resolutions, compatibility_relation

family = enumerate_bcts(((1, 2, 1), (2, 2)))
rel = secondary_relation(family)
print(all(compatibility_relation(family, res) == rel for res in all_resolutions((2, 2))))
