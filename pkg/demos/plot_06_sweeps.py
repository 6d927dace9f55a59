# coding: utf-8

# # Exhaustive sweeps
#
# ``run_sweep`` builds several relations on every family up to a given total
# and reports any pair of kinds that disagree.

# In[1]:

from bowbruhat import SweepConfig, run_sweep

report = run_sweep(SweepConfig(4, kinds=("bruhat", "secondary", "geometric")))
print(report.all_equal, len(report.pairs))


# The same sweep from the shell, with stable JSON on stdout:
#
#     bowbruhat verify --max-total 6 --kinds secondary,geometric

# In[2]:

data = report.to_json(timing=False)
print({k: data[k] for k in ("max_total", "kinds", "pair_count", "member_count")})
