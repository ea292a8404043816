import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from matlift.centralizer import (CentralizerCoords, coords_to_matrix, express_in_powers, find_cyclic_frame,
                                 is_cyclic, krylov_matrix, min_poly_residue, verify_null_ideal_small)
from matlift.errors import BudgetExceeded, NotCyclic, NotInCentralizer
from matlift.instances import random_cyclic, random_element, random_matrix
from matlift.matrix import Matrix, UniPoly
from matlift.ring import Family, RingSpec

F3, F5 = RingSpec(3, 1), RingSpec(5, 1)


def brute_min_poly(A: Matrix) -> UniPoly:
    """Lowest-degree monic annihilator, by trying every monic polynomial in order of degree."""
    spec = A.spec
    for d in range(1, A.n + 1):
        hits = [UniPoly(spec, tuple(cs) + (spec.one,))
                for cs in itertools.product(list(spec.elements()), repeat=d)
                if UniPoly(spec, tuple(cs) + (spec.one,))(A).is_zero()]
        if hits:
            assert len(hits) == 1
            return hits[0]
    raise AssertionError


def test_min_poly_examples():
    assert min_poly_residue(Matrix.diag(F3, [2, 2])) == UniPoly.from_coeffs(F3, [1, 1])      # t - 2
    assert min_poly_residue(Matrix.diag(F5, [0, 4])) == UniPoly.from_coeffs(F5, [0, 1, 1])   # t^2 + t
    C = Matrix.companion(F3, [-2, 0])
    assert min_poly_residue(C) == UniPoly.from_coeffs(F3, [1, 0, 1])                          # t^2 + 1


@pytest.mark.parametrize("seed", range(25))
def test_min_poly_matches_brute_force(seed):
    rng = random.Random(seed)
    spec = rng.choice([F3, F5, RingSpec(3, 1, Family.SERIES)])
    n = rng.randint(1, 3)
    if rng.random() < 0.5:
        A = random_matrix(spec, n, rng)
    else:   # block-scalar matrices have small minimal polynomials
        A = Matrix.diag(spec, [random_element(spec, rng)] * (n - 1) + [random_element(spec, rng)])
    assert min_poly_residue(A) == brute_min_poly(A)


def test_is_cyclic_examples():
    assert not is_cyclic(Matrix.diag(RingSpec(3, 2), [5, 2]))
    assert is_cyclic(Matrix.diag(RingSpec(5, 2), [0, 9]))
    assert not is_cyclic(Matrix.identity(RingSpec(7, 2), 3))
    assert is_cyclic(Matrix.identity(RingSpec(7, 2), 1))


def test_find_frame_examples():
    R25 = RingSpec(5, 2)
    frame = find_cyclic_frame(Matrix.diag(R25, [0, 9]))
    assert frame.v == (1, 1)
    assert frame.K == Matrix.from_rows(R25, [[1, 0], [1, 9]])
    assert frame.K @ frame.K_inv == Matrix.identity(R25, 2)

    C = Matrix.companion(RingSpec(3, 3), [4, 1, 7])
    frame = find_cyclic_frame(C)
    assert frame.v == (1, 0, 0)
    assert frame.K == Matrix.identity(C.spec, 3)

    with pytest.raises(NotCyclic):
        find_cyclic_frame(Matrix.diag(F3, [2, 2]))


def test_express_in_powers_examples():
    A = Matrix.diag(F5, [0, 4])
    frame = find_cyclic_frame(A)
    assert express_in_powers(frame, Matrix.diag(F5, [1, 2])).coeffs == (1, 4)
    assert (1 + 4 * 4) % 5 == 2
    assert express_in_powers(frame, A).coeffs == (0, 1)
    assert express_in_powers(frame, Matrix.identity(F5, 2)).coeffs == (1, 0)
    with pytest.raises(NotInCentralizer):
        express_in_powers(frame, Matrix.from_rows(F5, [[0, 1], [0, 0]]))


def test_coords_to_matrix_examples():
    R = RingSpec(3, 2)
    A = random_cyclic(R, 3, random.Random(1))
    frame = find_cyclic_frame(A)
    assert coords_to_matrix(frame, CentralizerCoords(R, (1, 0, 0))) == Matrix.identity(R, 3)
    assert coords_to_matrix(frame, CentralizerCoords(R, (0, 1, 0))) == A


def test_null_ideal_examples():
    R9 = RingSpec(3, 2)
    A = Matrix.from_rows(R9, [[0, 1], [4, 3]])        # companion-like, cyclic
    assert is_cyclic(A)
    rep = verify_null_ideal_small(A, 2)
    assert rep.candidates == 81
    assert rep.annihilators == [(0, 0)]
    assert rep.only_zero

    rep = verify_null_ideal_small(Matrix.diag(F3, [2, 2]), 2)
    assert set(rep.nonzero_annihilators) == {(1, 1), (2, 2)}      # t - 2 and its multiples
    assert rep.min_nonzero_degree() == 1

    rep = verify_null_ideal_small(A, 0)
    assert rep.annihilators == [] and rep.candidates == 0

    with pytest.raises(BudgetExceeded):
        verify_null_ideal_small(Matrix.identity(RingSpec(7, 4), 3), 3, budget=1000)


# --------------------------------------------------------------- properties

@st.composite
def cyclic_setups(draw):
    p = draw(st.sampled_from([3, 5, 7]))
    ell = draw(st.integers(1, 4))
    fam = draw(st.sampled_from(list(Family)))
    n = draw(st.integers(1, 3))
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    spec = RingSpec(p, ell, fam)
    return spec, random_cyclic(spec, n, rng), rng


@settings(max_examples=50, deadline=None)
@given(cyclic_setups())
def test_frame_and_round_trips(setup):
    spec, A, rng = setup
    frame = find_cyclic_frame(A)
    assert frame.K == krylov_matrix(A, frame.v)
    assert frame.K.is_invertible()
    c = CentralizerCoords(spec, tuple(random_element(spec, rng) for _ in range(A.n)))
    B = coords_to_matrix(frame, c)
    assert express_in_powers(frame, B) == c
    assert coords_to_matrix(frame, express_in_powers(frame, B)) == B


@settings(max_examples=50, deadline=None)
@given(cyclic_setups(), st.integers(1, 4))
def test_coordinates_commute_with_reduction(setup, m):
    spec, A, rng = setup
    m = min(m, spec.ell)
    frame = find_cyclic_frame(A)
    c = CentralizerCoords(spec, tuple(random_element(spec, rng) for _ in range(A.n)))
    B = coords_to_matrix(frame, c)
    assert express_in_powers(frame.reduce(m), B.reduce(m)) == c.reduce(m)


@settings(max_examples=50, deadline=None)
@given(cyclic_setups())
def test_polynomials_in_A_commute(setup):
    spec, A, rng = setup
    frame = find_cyclic_frame(A)
    mk = lambda: coords_to_matrix(frame, CentralizerCoords(
        spec, tuple(random_element(spec, rng) for _ in range(A.n))))
    B1, B2 = mk(), mk()
    assert B1 @ B2 == B2 @ B1
    assert A.charpoly()(A).is_zero()
