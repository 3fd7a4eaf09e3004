# %% [markdown]
# Hypercomplex structures and the HKT condition
#
# The same question answered twice: through the three torsions and through
# the Dolbeault form.

# %%
from hkt.catalog import catalog
from hkt.hypercomplex import hkt_check, hkt_check_dolbeault, strong_hkt_check

for name in ["r-h7", "hopf-su2-r", "bf-8dim", "flat-r4n"]:
    hyper = catalog(name).hyper
    a, b = hkt_check(hyper), hkt_check_dolbeault(hyper)
    print(f"{name:12} hkt {a.verdict!s:5} dolbeault {b.verdict!s:5}")

# %%
rep = hkt_check(catalog("r-h7").hyper)
print("r-h7 witness:", rep.witness)

# %%
print("bf-8dim strong:", strong_hkt_check(catalog("bf-8dim").hyper).verdict)
