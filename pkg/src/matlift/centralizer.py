"""Cyclic matrices and the coordinate system of their centralizer.

For a cyclic A over O_l every matrix commuting with A is a polynomial in A of
degree < n, and the coefficients are unique. :class:`CyclicFrame` fixes a
cyclic vector v; the coordinates of B are then the solution of K c = B v where
K is the Krylov matrix [v, Av, ..., A^{n-1} v].
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (BadTarget, BudgetExceeded, FrameSearchExhausted, NotCyclic,
                     NotInCentralizer, ReconstructionFailure, SpecMismatch)
from .matrix import Matrix, UniPoly, invert_matrix
from .ring import Raw, RingSpec

#: Seed of the pseudo-random cyclic-vector candidates tried after the fixed ones.
FRAME_SEED = 20240611
#: Total number of candidate vectors tried before giving up.
FRAME_MAX_ATTEMPTS = 64


def min_poly_residue(Abar: Matrix) -> UniPoly:
    """Minimal polynomial of a matrix over the residue field F_p.

    The powers I, A, A^2, ... are flattened to vectors of length n^2 and
    reduced against an echelon basis; the first power that reduces to zero
    gives the monic relation.
    """
    spec = Abar.spec
    if spec.ell != 1:
        raise BadTarget(f"minimal polynomial is computed over the residue field, got {spec}")
    zero = spec.zero
    basis = []  # (pivot, vector, combination of powers)
    power = Matrix.identity(spec, Abar.n)
    for k in range(Abar.n + 1):
        vec = [x for row in power.rows for x in row]
        combo = [zero] * k + [spec.one]
        for piv, bvec, bcombo in basis:
            f = vec[piv]
            if f != zero:
                vec = [spec.sub(a, spec.mul(f, b)) for a, b in zip(vec, bvec)]
                padded = bcombo + [zero] * (len(combo) - len(bcombo))
                combo = [spec.sub(a, spec.mul(f, b)) for a, b in zip(combo, padded)]
        piv = next((i for i, x in enumerate(vec) if x != zero), None)
        if piv is None:
            return UniPoly(spec, tuple(combo))
        inv = spec.inv(vec[piv])
        basis.append((piv, [spec.mul(inv, a) for a in vec], [spec.mul(inv, a) for a in combo]))
        power = power @ Abar
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def is_cyclic(A: Matrix) -> bool:
    """A is cyclic iff its reduction mod pi has minimal polynomial of degree n."""
    return min_poly_residue(A.reduce(1)).degree == A.n


def krylov_matrix(A: Matrix, v: Sequence[Raw]) -> Matrix:
    cols = [tuple(v)]
    for _ in range(A.n - 1):
        cols.append(A.apply(cols[-1]))
    return Matrix(A.spec, tuple(zip(*cols)))


@dataclass(frozen=True)
class CyclicFrame:
    A: Matrix
    v: tuple
    K: Matrix
    K_inv: Matrix

    @property
    def spec(self) -> RingSpec:
        return self.A.spec

    @property
    def n(self) -> int:
        return self.A.n

    def reduce(self, target_ell: int) -> "CyclicFrame":
        if target_ell == self.spec.ell:
            return self
        red = self.spec.reduce
        return CyclicFrame(self.A.reduce(target_ell), tuple(red(x, target_ell) for x in self.v),
                           self.K.reduce(target_ell), self.K_inv.reduce(target_ell))


def _frame_candidates(spec: RingSpec, n: int):
    for i in range(n):
        yield tuple(spec.one if j == i else spec.zero for j in range(n))
    yield (spec.one,) * n
    rng = random.Random(FRAME_SEED)
    while True:
        yield tuple(spec.element_at(rng.randrange(spec.order)) for _ in range(n))


def find_cyclic_frame(A: Matrix, max_attempts: int = FRAME_MAX_ATTEMPTS) -> CyclicFrame:
    """Find a cyclic vector of A.

    Candidates are tried in a fixed order: the standard basis vectors, the
    all-ones vector, then pseudo-random vectors drawn with :data:`FRAME_SEED`.
    """
    if not is_cyclic(A):
        raise NotCyclic("matrix is not cyclic: its reduction has a minimal polynomial of degree < n")
    for v in itertools.islice(_frame_candidates(A.spec, A.n), max_attempts):
        K = krylov_matrix(A, v)
        if K.is_invertible():
            return CyclicFrame(A, v, K, invert_matrix(K))
    raise FrameSearchExhausted(f"no cyclic vector found in {max_attempts} attempts")


@dataclass(frozen=True)
class CentralizerCoords:
    """Coefficients (c_0, ..., c_{n-1}) of sum_j c_j A^j."""

    spec: RingSpec
    coeffs: tuple

    def reduce(self, target_ell: int) -> "CentralizerCoords":
        red = self.spec.reduce
        return CentralizerCoords(self.spec.at_length(target_ell), tuple(red(c, target_ell) for c in self.coeffs))

    def lift_to(self, spec: RingSpec) -> "CentralizerCoords":
        src = self.spec.ell
        return CentralizerCoords(spec, tuple(spec.lift(c, src) for c in self.coeffs))

    def to_json(self) -> list:
        return [self.spec.to_json_value(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, spec: RingSpec, data) -> "CentralizerCoords":
        return cls(spec, tuple(spec.canon(c) for c in data))


def coords_to_matrix(frame: CyclicFrame, c: CentralizerCoords) -> Matrix:
    """sum_j c_j A^j by Horner's rule."""
    if c.spec != frame.spec:
        raise SpecMismatch(f"{c.spec} vs {frame.spec}")
    ident = Matrix.identity(frame.spec, frame.n)
    result = Matrix.zeros(frame.spec, frame.n)
    for cj in reversed(c.coeffs):
        result = result @ frame.A + ident.scale(cj)
    return result


def express_in_powers(frame: CyclicFrame, B: Matrix) -> CentralizerCoords:
    if B.spec != frame.spec:
        raise SpecMismatch(f"{B.spec} vs {frame.spec}")
    if not B.commutes_with(frame.A):
        raise NotInCentralizer("matrix does not commute with A")
    coords = CentralizerCoords(frame.spec, frame.K_inv.apply(B.apply(frame.v)))
    if coords_to_matrix(frame, coords) != B:
        raise ReconstructionFailure("coordinates do not reproduce the matrix")
    return coords


@dataclass
class NullIdealReport:
    """Outcome of the exhaustive annihilator scan.

    ``annihilators`` lists coefficient tuples (lowest degree first, padded to
    ``degree_bound``) of every polynomial of degree < ``degree_bound`` that
    kills A; the zero polynomial is included when the scan is non-empty.
    """

    spec: RingSpec
    degree_bound: int
    candidates: int
    annihilators: list = field(default_factory=list)

    @property
    def nonzero_annihilators(self) -> list:
        z = self.spec.zero
        return [a for a in self.annihilators if any(c != z for c in a)]

    @property
    def only_zero(self) -> bool:
        return not self.nonzero_annihilators

    def min_nonzero_degree(self) -> Optional[int]:
        z = self.spec.zero
        degs = [max(k for k, c in enumerate(a) if c != z) for a in self.nonzero_annihilators]
        return min(degs, default=None)

    def to_json(self) -> dict:
        return {"ring": self.spec.to_json(), "degree_bound": self.degree_bound,
                "candidates": self.candidates,
                "annihilators": [[self.spec.to_json_value(c) for c in a] for a in self.annihilators]}


def verify_null_ideal_small(A: Matrix, degree_bound: Optional[int] = None,
                            budget: int = 10 ** 6) -> NullIdealReport:
    """Enumerate every polynomial over O_l of degree < degree_bound and keep the annihilators of A."""
    spec = A.spec
    bound = A.n if degree_bound is None else degree_bound
    if bound <= 0:
        return NullIdealReport(spec, bound, 0, [])
    total = spec.order ** bound
    if total > budget:
        raise BudgetExceeded(f"{total} candidate polynomials exceed the budget of {budget}")
    powers = [Matrix.identity(spec, A.n)]
    for _ in range(bound - 1):
        powers.append(powers[-1] @ A)
    n = A.n
    # entry (i, j) of sum_k c_k A^k is a dot product with the (i, j) entries of the powers
    columns = [[P.rows[i][j] for P in powers] for i in range(n) for j in range(n)]
    found = []
    zero = spec.zero
    for cs in itertools.product(list(spec.elements()), repeat=bound):
        if all(spec.dot(cs, col) == zero for col in columns):
            found.append(tuple(cs))
    return NullIdealReport(spec, bound, total, found)
