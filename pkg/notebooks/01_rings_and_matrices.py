# %% [markdown]
# # Truncated rings and matrices over them
#
# Two families of finite local rings are supported: the integers mod p^l and
# truncated power series F_p[u]/(u^l). Both have p^l elements, a uniformizer
# (p and u) and the residue field F_p.

# %%
from matlift import Family, Matrix, RingSpec

Z25 = RingSpec(5, 2)
S = RingSpec(5, 2, Family.SERIES)
print(Z25, "and", S)

# %% [markdown]
# Raw values are ints for the integer family and coefficient tuples, lowest
# power first, for series. `RingSpec(...)(value)` wraps them for operator syntax.

# %%
x = Z25(10)
print(x.valuation(), x.divide_by_pi_power(1), x.reduce(1))
u = S((0, 1))
print((u * u).value, S((3, 1)).inverse().value)

# %% [markdown]
# Matrices carry their ring. The characteristic polynomial uses a
# division-free algorithm, so it works over rings with zero divisors.

# %%
A = Matrix.from_rows(Z25, [[3, 1], [7, 2]])
chi = A.charpoly()
print("charpoly coefficients (constant first):", chi.coeffs)
print("Cayley-Hamilton:", chi(A).is_zero())
print("invertible:", A.is_invertible(), "inverse:", A.inverse().tolist())

# %% [markdown]
# Reduction to a shorter length commutes with everything above.

# %%
print(A.reduce(1).charpoly() == chi.reduce(1))
