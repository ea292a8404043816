# %% [markdown]
# # When lifting fails: B^2 = diag(5, 2) over Z/9
#
# Mod 3 the target is 2I, which has square roots, but no 2x2 matrix over Z/9
# squares to diag(5, 2). The scalar reduction is not cyclic, so the lifting
# hypotheses reject the problem before any step is attempted.

# %%
from matlift import Matrix, MultiPoly, RingSpec
from matlift.errors import NotCyclic
from matlift.lift import validate_hypotheses
from matlift.demos import load_demo
from matlift.search import Mode, exhaustive_solutions_over_ring, residue_solutions

F3 = RingSpec(3, 1)
pre = residue_solutions(Matrix.diag(F3, [2, 2]), MultiPoly.univariate(F3, [0, 0, 1]), Mode.FULL_SPACE)
print(len(pre), "square roots of 2I over F_3:")
for s in pre:
    B = s.matrices[0]
    print(" ", B.tolist(), "trace", (B.rows[0][0] + B.rows[1][1]) % 3, "det", B.det().value)

# %% [markdown]
# All six have trace 0 and determinant 1, the full set of such matrices over F_3.
# Over Z/9 there are none at all.

# %%
R9 = RingSpec(3, 2)
res = exhaustive_solutions_over_ring(Matrix.diag(R9, [5, 2]), MultiPoly.univariate(R9, [0, 0, 1]),
                                     mode=Mode.FULL_SPACE)
print(len(res), "solutions among", res.candidates, "candidates")

try:
    validate_hypotheses(load_demo("z9-counterexample").lift_problem())
except NotCyclic as exc:
    print("rejected:", exc.code)
