# %% [markdown]
# # Lifting a two-variable solution 5-adically
#
# F(x, y) = xy + y^2 and A = diag(0, 9). Over F_5 the pair diag(4, 0), diag(1, 2)
# solves F = A, both partial derivatives are invertible there, and A is cyclic,
# so the pair lifts one level at a time.

# %%
from matlift import lift_to_length
from matlift.demos import load_demo, padic5_closed_form
from matlift.polynomial import eval_at_tuple

problem = load_demo("padic5")
transcript = lift_to_length(problem.lift_problem())
print("derivative profile:", transcript.profile.to_json())
for rec in transcript.levels:
    print(rec.level, [B.tolist() for B in rec.matrices], rec.residual_zero)

# %% [markdown]
# Solutions are not unique. The pair diag(-1, 5/2), diag(1, 2) is another
# exact solution at every length, and it reduces to the same seed.

# %%
for L in range(2, 7):
    spec = problem.ring.at_length(L)
    pair = padic5_closed_form(spec)
    print(L, eval_at_tuple(problem.F.reduce(L), pair) == problem.A.reduce(L))

# %% [markdown]
# The lifted pair is checked against an exhaustive search of O[A] x O[A] at length 2.

# %%
from matlift.search import cross_check_lift

small = problem.__class__(problem.ring, problem.A, problem.F, problem.seed, 2).lift_problem()
print(cross_check_lift(small).to_json())
