# %% [markdown]
# # The universalized Prisoner's Dilemma
#
# Build the PD, universalize it once, and solve for every symmetric
# equilibrium exactly. Payoffs are utilities: bigger is better.

# %%
from fractions import Fraction

from universalis import (
    PdParams,
    closed_form_upd,
    make_pd,
    obligation_strength,
    pd_from_sentences,
    support_report,
    symmetric_equilibria,
    universalize,
)

p = PdParams(Z=0, Y=1, X=2, W=3)
pd = make_pd(p)
upd = universalize(pd, 1)

for label, row in zip(upd.labels, upd.payoff):
    print(f"{label:>4}", *(f"{v!s:>4}" for v in row))

# %% [markdown]
# The PD alone has mutual confession as its only equilibrium.

# %%
for f in symmetric_equilibria(pd):
    print("PD:", [pd.labels[i] for i in f.support], f.point, "payoff", f.payoff)

# %% [markdown]
# After universalizing, exactly one of the 15 supports carries an
# equilibrium: a mix of silent-and-universalize with confess-without.

# %%
rows = support_report(upd)
for row in rows:
    tag = row.status if row.finding is None else f"{row.status}: {row.finding.point}"
    print([upd.labels[i] for i in row.support], tag)

cf = closed_form_upd(p)
print("closed form q1, q4, ev:", cf.q1, cf.q4, cf.ev)

# %% [markdown]
# ## Romeo and Juliet
#
# Jail terms in minutes, negated into utilities. Thirty years is taken as
# 11,500,000 minutes to match the scenario's own figure.

# %%
minutes_50_years = 50 * 365 * 24 * 60
rj = pd_from_sentences(mutual_silence=1, sucker=minutes_50_years, temptation=0, mutual_confession=11_500_000)
q1 = obligation_strength(rj)
print("q1 =", q1, "~", float(q1))
(f,) = symmetric_equilibria(universalize(make_pd(rj), 1))
assert f.point[0] == q1

# %% [markdown]
# The sucker payoff never enters: make it as catastrophic as you like.

# %%
for z in (rj.Z, -10**9, Fraction(-10**12, 7)):
    q = PdParams(z, rj.Y, rj.X, rj.W)
    (g,) = symmetric_equilibria(universalize(make_pd(q), 1))
    print(z, g.point[3])
