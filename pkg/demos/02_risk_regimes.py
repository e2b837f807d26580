# %% [markdown]
# # Adding risk
#
# Risk ``r`` lowers the payoff of staying silent while universalizing.
# Between 0 and ``X - Y`` the same mixture survives with more confession;
# at ``X - Y`` the game collapses onto confession.

# %%
from fractions import Fraction

from universalis import PdParams, RiskLevel, add_risk, closed_form_updr, symmetric_equilibria
from universalis.cli import sweep

p = PdParams(Z=0, Y=1, X=2, W=3)

for rec in sweep(p, steps=5):
    print(f"r={rec['r']!s:>4}  q1={rec['q1']!s:>4}  ev={rec['ev']!s:>4}  findings={rec['n_findings']}")

# %% [markdown]
# At maximal risk there are three findings: two pure strategies and the
# segment joining them.

# %%
game = add_risk(p, p.X - p.Y)
for f in symmetric_equilibria(game):
    mixes = ", ".join(str(m) for m in f.mixes())
    print(f.kind, [game.labels[i] for i in f.support], mixes, "payoff", f.payoff)

# %% [markdown]
# Negative risk (a bonus for universalizing silently) at or below
# ``X - W`` makes pure SU an equilibrium.

# %%
for r in (Fraction(-1, 2), -1, -2):
    g = add_risk(p, RiskLevel(r, unrestricted=True))
    supports = [[g.labels[i] for i in f.support] for f in symmetric_equilibria(g)]
    print(r, supports)

# %%
print(closed_form_updr(p, Fraction(1, 2)))
