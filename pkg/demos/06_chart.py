# %% [markdown]
# Conformally flat structures on a chart
#
# Metric rho^-k times the flat one on R^4 minus the origin, with exact
# radial arithmetic and spot checks at rational points.

# %%
from hkt.chart import chart_generalized_hk, hopf_exponent_sweep, hopf_strong_hkt, z_action_invariance
from hkt.chart import ChartHyperhermitian
from hkt.exact import identity

print("strong exponents in 0..4:", hopf_exponent_sweep(range(5)))

# %%
rep = hopf_strong_hkt(2)
print("k=2 strong:", rep.verdict, "points agree:", rep.notes["points_consistent"])

# %%
pair = chart_generalized_hk(2)
print("left/right pair:", pair.verdict)

# %%
for k in (2, 1):
    inv = z_action_invariance(ChartHyperhermitian(k, 4), -identity(4))
    print(f"k={k}: invariant under x -> 2x, psi = -Id:", inv.verdict)
