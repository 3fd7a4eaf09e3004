# %% [markdown]
# Building strong HKT algebras
#
# A Joyce-type base and its extension by an sp(1) representation, then a
# representation that is not skew and breaks the strong condition.

# %%
from hkt.catalog import bf_base, bf_rho
from hkt.constructions import RhoRep, bf_extend
from hkt.exact import identity, zeros
from hkt.hypercomplex import hkt_check, strong_hkt_check

base = bf_base()
print("base strong:", strong_hkt_check(base).verdict)

# %%
rep = RhoRep(base.carrier, 1, bf_rho())
print("rho in sp(1):", rep.sp_membership())
ext = bf_extend(base, rep)
print("extension dim", ext.n, "strong:", strong_hkt_check(ext).verdict)

# %%
bad = bf_extend(base, RhoRep(base.carrier, 1, [zeros(4)] * 3 + [identity(4)]))
print("non-skew extension HKT:", hkt_check(bad).verdict)
