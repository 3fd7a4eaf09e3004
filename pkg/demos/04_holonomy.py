# %% [markdown]
# Curvature and holonomy algebras

# %%
from hkt.checks import run_check
from hkt.catalog import catalog

for name in ["su2-levi-civita-demo", "hopf-su2-r", "bf-8dim", "r-h7"]:
    rep = run_check("holonomy", catalog(name))
    print(f"{name:22} dim {rep.notes['dim']}  inside {rep.notes['target']}: {rep.verdict}")
