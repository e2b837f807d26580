# %% [markdown]
# # Beyond symmetric profiles
#
# Enumerating support pairs of the full bimatrix game confirms the
# symmetric equilibria and shows what else is there.

# %%
from universalis import PdParams, add_risk, two_sided_equilibria

p = PdParams(Z=0, Y=1, X=2, W=3)
for r in (0, 1):
    game = add_risk(p, r)
    print(f"r = {r}")
    for prof in two_sided_equilibria(game):
        kind = "symmetric" if prof.symmetric else "asymmetric"
        flag = " (degenerate)" if prof.degenerate else ""
        print(f"  {kind}{flag}: row {prof.row} col {prof.col} payoffs {prof.row_payoff}, {prof.col_payoff}")
