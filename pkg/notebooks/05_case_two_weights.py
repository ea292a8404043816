# %% [markdown]
# # Several unit partials, and what happens when p divides their number
#
# With r invertible partial derivatives, the defect is split between the r
# variables with weights w_i whose inverses sum to 1. If p does not divide r,
# every w_i = r. If p divides r, r is not invertible, so the first r - 1 unit
# variables take 2(r - 1) and the last takes 2.

# %%
from matlift import lift_to_length
from matlift.demos import load_demo
from matlift.lift import DerivativeProfile, weight_identity_holds
from matlift.ring import RingSpec

problem = load_demo("case2-weights")
tr = lift_to_length(problem.lift_problem())
print("case", tr.profile.case, "weights", tr.profile.weights())
print("inverse weights sum to 1:", weight_identity_holds(problem.ring, tr.profile))
for rec in tr.levels:
    print(rec.level, [B.tolist() for B in rec.matrices], rec.residual_zero)

# %% [markdown]
# Both weight identities hold in every ring of the tower, for any r.

# %%
for p in (3, 5, 7):
    ok = all(weight_identity_holds(RingSpec(p, ell), DerivativeProfile(tuple(range(r)), (), tuple(range(r)), p))
             for r in range(1, 3 * p + 1) for ell in (1, 2, 3))
    print(p, ok)

# %% [markdown]
# Random multivariate instances, including some with a variable whose partial
# vanishes mod p: that variable is carried along unchanged.

# %%
import random

from matlift.instances import random_multivariate_problem

rng = random.Random(1)
for zero_partial in (False, True):
    prob = random_multivariate_problem(rng, 5, 2, 4, 3, zero_partial=zero_partial)
    t = lift_to_length(prob)
    print(t.profile.to_json(), all(rec.residual_zero for rec in t.levels))
