"""Random test instances: cyclic matrices, monic polynomials and liftable problems."""

from __future__ import annotations

import random
from typing import Optional

from .centralizer import is_cyclic
from .lift import LiftProblem, classify_partials
from .matrix import Matrix
from .polynomial import MultiPoly, eval_at_tuple
from .ring import Family, RingSpec
from .search import Mode, residue_solutions


def random_element(spec: RingSpec, rng: random.Random):
    return spec.element_at(rng.randrange(spec.order))


def random_matrix(spec: RingSpec, n: int, rng: random.Random) -> Matrix:
    return Matrix(spec, tuple(tuple(random_element(spec, rng) for _ in range(n)) for _ in range(n)))


def random_invertible(spec: RingSpec, n: int, rng: random.Random) -> Matrix:
    while True:
        P = random_matrix(spec, n, rng)
        if P.is_invertible():
            return P


def random_cyclic(spec: RingSpec, n: int, rng: random.Random) -> Matrix:
    """P C P^{-1} with C the companion matrix of a random monic polynomial."""
    C = Matrix.companion(spec, [random_element(spec, rng) for _ in range(n)])
    P = random_invertible(spec, n, rng)
    return P @ C @ P.inverse()


def random_monic(spec: RingSpec, degree: int, rng: random.Random) -> MultiPoly:
    return MultiPoly.univariate(spec, [random_element(spec, rng) for _ in range(degree)] + [spec.one])


def random_univariate_problem(rng: random.Random, p: int, n: int, L: int,
                              family: Family = Family.INT, max_degree: int = 4,
                              max_tries: int = 500) -> LiftProblem:
    """Cyclic A, random monic F of degree <= max_degree, seed from the residue search with unit derivative."""
    spec = RingSpec(p, L, family)
    for _ in range(max_tries):
        A = random_cyclic(spec, n, rng)
        F = random_monic(spec, rng.randint(1, max_degree), rng)
        sols = [s for s in residue_solutions(A.reduce(1), F.reduce(1), Mode.IN_CENTRALIZER)
                if s.classes == ["unit"]]
        if sols:
            return LiftProblem(A, F, rng.choice(sols).matrices, strict_monic=True)
    raise RuntimeError("no liftable instance found")


def random_multivariate_problem(rng: random.Random, p: int, n: int, L: int, m: int,
                                family: Family = Family.INT, require_r: Optional[int] = None,
                                zero_partial: bool = False, max_tries: int = 2000) -> LiftProblem:
    """Random commuting seed inside k[A0] for a cyclic A0, random F, and A any lift of f(seed).

    ``zero_partial`` adds the last variable only through a term c * x_m^p, so
    its partial derivative vanishes mod p. ``require_r`` keeps only
    instances with exactly that many invertible partials.
    """
    spec = RingSpec(p, L, family)
    k = spec.residue_field()
    for _ in range(max_tries):
        A0 = random_cyclic(k, n, rng)
        powers = [A0 ** j for j in range(n)]
        seed = []
        for _ in range(m):
            B = Matrix.zeros(k, n)
            for P in powers:
                B = B + P.scale(random_element(k, rng))
            seed.append(B)
        free = m - 1 if zero_partial else m
        terms = {}
        for _ in range(rng.randint(2, 4)):
            exps = [0] * m
            for _ in range(rng.randint(1, 3)):
                exps[rng.randrange(free)] += 1
            terms[tuple(exps)] = random_element(spec, rng)
        for i in range(free):
            e = [0] * m
            e[i] = 1
            terms.setdefault(tuple(e), random_element(spec, rng))
        if zero_partial:
            e = [0] * m
            e[m - 1] = p
            terms[tuple(e)] = spec.from_int(rng.randrange(1, p))
        F = MultiPoly.from_dict(spec, m, terms)
        Abar = eval_at_tuple(F.reduce(1), seed)
        if not is_cyclic(Abar):
            continue
        classes = classify_partials(F.reduce(1), seed)
        if "neither" in classes or "unit" not in classes:
            continue
        if require_r is not None and classes.count("unit") != require_r:
            continue
        if zero_partial and classes[-1] != "zero":
            continue
        A = Abar.lift_to(spec) + random_matrix(spec, n, rng).scale(spec.pi)
        return LiftProblem(A, F, tuple(seed))
    raise RuntimeError("no liftable instance found")
