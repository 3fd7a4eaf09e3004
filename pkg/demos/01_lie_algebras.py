# %% [markdown]
# Lie algebras from structure constants
#
# Build the catalog algebras, check Jacobi exactly and watch the
# Chevalley-Eilenberg differential square to zero.

# %%
from fractions import Fraction

from hkt.catalog import catalog
from hkt.forms import AlternatingForm
from hkt.lie import validate_jacobi

# %%
for name in ["r-h7", "hopf-su2-r", "bf-8dim"]:
    b = catalog(name)
    print(name, "dim", b.n, "jacobi", validate_jacobi(b.algebra).verdict)

# %%
g = catalog("hopf-su2-r").algebra
for i in range(g.n):
    e = AlternatingForm(g.n, 1, {(i,): Fraction(1)})
    print(f"d e^{i + 1} =", g.d(e))

# %%
a = AlternatingForm(g.n, 2, {(0, 1): Fraction(1), (1, 3): Fraction(-2, 3)})
print("d(d a) == 0:", g.d(g.d(a)).is_zero())
