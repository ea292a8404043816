# %% [markdown]
# # Cyclic matrices and coordinates in O[A]
#
# When the reduction of A has minimal polynomial of full degree, every matrix
# commuting with A is a polynomial in A of degree < n. The engine stores such
# matrices by their n coefficients, computed from a Krylov frame (v, Av, ...).

# %%
import random

from matlift import Matrix, RingSpec
from matlift.centralizer import (coords_to_matrix, express_in_powers, find_cyclic_frame, is_cyclic,
                                 min_poly_residue, verify_null_ideal_small)
from matlift.instances import random_cyclic

R = RingSpec(5, 2)
A = Matrix.diag(R, [0, 9])
print("cyclic:", is_cyclic(A), " min poly mod 5:", min_poly_residue(A.reduce(1)).coeffs)
frame = find_cyclic_frame(A)
print("cyclic vector:", frame.v)

# %%
B = Matrix.diag(R, [1, 2])
c = express_in_powers(frame, B)
print("diag(1, 2) = %s * I + %s * A" % c.coeffs)
print(coords_to_matrix(frame, c) == B)

# %% [markdown]
# A scalar matrix is the standard non-example.

# %%
print(is_cyclic(Matrix.diag(RingSpec(3, 2), [5, 2])))

# %% [markdown]
# For a cyclic A, no nonzero polynomial of degree < n kills A. A brute-force scan
# over small rings confirms it, with a scalar matrix as the negative control.

# %%
rng = random.Random(0)
C = random_cyclic(RingSpec(3, 2), 2, rng)
print(verify_null_ideal_small(C, 2).only_zero)
print(verify_null_ideal_small(Matrix.diag(RingSpec(3, 1), [2, 2]), 2).nonzero_annihilators)
