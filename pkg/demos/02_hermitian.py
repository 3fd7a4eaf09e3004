# %% [markdown]
# Hermitian geometry on a Lie algebra
#
# Fundamental form, the Gauduchon line of connections and the Bismut torsion.

# %%
from hkt.catalog import catalog
from hkt.hermitian import bismut_torsion, fundamental_form, gauduchon_connection

hs = catalog("hopf-su2-r").hermitian
print("omega =", fundamental_form(hs))

# %%
for t in (-1, 0, 1, 2):
    conn = gauduchon_connection(hs, t)
    print(f"t={t:>2}: metric {conn.is_metric(hs.G)}, preserves J {conn.preserves(hs.J)}")

# %%
H = bismut_torsion(hs)
print("Bismut torsion H =", H)
print("closed:", catalog("hopf-su2-r").algebra.d(H).is_zero())
