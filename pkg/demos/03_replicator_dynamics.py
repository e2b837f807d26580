# %% [markdown]
# # Replicator dynamics
#
# Float iteration of the discrete replicator map. Nothing here claims the
# universalized game converges to its mixed equilibrium; we only look.

# %%
import numpy as np

from universalis import PdParams, closed_form_upd, make_pd, random_interior, simulate, universalize

p = PdParams(Z=0, Y=1, X=2, W=3)
pd = make_pd(p)
traj = simulate(pd, (0.5, 0.5), steps=10_000, record_every=2_000)
for step, state in zip(traj.steps, traj.states):
    print(step, state.round(6))

# %% [markdown]
# The universalized game from a few random interior starts, with the L1
# distance to the closed-form mixture.

# %%
upd = universalize(pd, 1)
target = closed_form_upd(p).point()
for k, x0 in enumerate(random_interior(4, 3, seed=1)):
    t = simulate(upd, x0, steps=5_000, record_every=1_000)
    print(f"run {k}:", np.array2string(t.distance_to(target), precision=4))
    print("   final", t.final.round(4))
