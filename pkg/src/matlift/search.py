"""Brute-force oracles: enumerate every solution of F(B) = A at desk scale.

Candidates are either all of M_n(O_l)^m (``FULL_SPACE``) or all tuples of
polynomials in A of degree < n (``IN_CENTRALIZER``). For cyclic A the second
set contains every pairwise-commuting solution, since each B_i commutes with
F(B) = A and the centralizer of a cyclic matrix is O_l[A].

Evaluation goes through :mod:`matlift._batch`, not through the matrix and
polynomial classes used by the lifting engine.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._batch import BatchRing
from .centralizer import is_cyclic
from .errors import BudgetExceeded, MatliftError, MismatchDetected, NotCyclic, SpecMismatch
from .lift import LiftProblem, classify_partials, lift_to_length, validate_hypotheses
from .matrix import Matrix
from .polynomial import MultiPoly

CHUNK = 1 << 16


class Mode(str, enum.Enum):
    IN_CENTRALIZER = "centralizer"
    FULL_SPACE = "full"
    AUTO = "auto"


@dataclass(frozen=True)
class SearchBudget:
    max_candidates: int = 10 ** 7

    def __post_init__(self):
        if self.max_candidates <= 0:
            raise ValueError("budget must be positive")

    def check(self, count: int, what: str = "candidates"):
        if count > self.max_candidates:
            raise BudgetExceeded(f"{count} {what} exceed the budget of {self.max_candidates}")


@dataclass
class SolutionSet:
    """Complete solution set over the enumerated ambient set, sorted row-major lexicographically."""

    mode: Mode
    candidates: int
    solutions: list = field(default_factory=list)

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __contains__(self, tup) -> bool:
        return tuple(tup) in self._index

    @property
    def _index(self) -> set:
        return set(self.solutions)

    def to_json(self) -> dict:
        return {"mode": self.mode.value, "candidates": self.candidates,
                "solutions": [[B.to_json() for B in tup] for tup in self.solutions]}


@dataclass
class ResidueSolution:
    matrices: tuple
    classes: list            # 'unit' / 'zero' / 'neither' per variable
    liftable: bool

    @property
    def r(self) -> int:
        return self.classes.count("unit")

    def to_json(self) -> dict:
        return {"matrices": [B.to_json() for B in self.matrices], "partials": self.classes,
                "r": self.r, "liftable": self.liftable}


def _sort_key(tup):
    return tuple(B.spec.index_of(x) for B in tup for row in B.rows for x in row)


def _enumerate(A: Matrix, F: MultiPoly, mode: Mode, budget: SearchBudget) -> SolutionSet:
    spec, n, m = A.spec, A.n, F.nvars
    if F.spec != spec:
        raise SpecMismatch(f"polynomial over {F.spec}, matrix over {spec}")
    br = BatchRing(spec)
    q = spec.order
    digits = n * n * m if mode is Mode.FULL_SPACE else n * m
    total = q ** digits
    budget.check(total)
    target = br.encode_matrix(A)
    if mode is Mode.IN_CENTRALIZER:
        apow = [br.identity(n)]
        Aenc = br.encode_matrix(A)[None]
        for _ in range(n - 1):
            apow.append(br.matmul(apow[-1][None], Aenc)[0])
    place = q ** np.arange(digits - 1, -1, -1, dtype=np.int64)

    found = []
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        dig = (idx[:, None] // place[None, :]) % q
        elems = br.elements_from_index(dig)            # (N, digits, w)
        N = idx.shape[0]
        if mode is Mode.FULL_SPACE:
            Xs = list(elems.reshape(N, m, n, n, br.w).transpose(1, 0, 2, 3, 4))
        else:
            cs = elems.reshape(N, m, n, br.w)
            Xs = []
            for i in range(m):
                B = np.zeros((N, n, n, br.w), dtype=np.int64)
                for j in range(n):
                    B = B + br.mul(cs[:, i, j, None, None, :], apow[j][None])
                Xs.append(B % br.mod)
        ok = np.all(br.eval_poly(F.terms, Xs, n) == target, axis=(1, 2, 3))
        if mode is Mode.FULL_SPACE and m > 1:
            for i in range(m):
                for j in range(i + 1, m):
                    ok &= np.all(br.matmul(Xs[i], Xs[j]) == br.matmul(Xs[j], Xs[i]), axis=(1, 2, 3))
        for k in np.nonzero(ok)[0]:
            found.append(tuple(br.decode_matrix(X[k]) for X in Xs))
    found.sort(key=_sort_key)
    return SolutionSet(mode, total, found)


def _resolve_mode(A: Matrix, F: MultiPoly, mode: Mode, budget: SearchBudget) -> Mode:
    mode = Mode(mode)
    if mode is not Mode.AUTO:
        if mode is Mode.IN_CENTRALIZER and not is_cyclic(A):
            raise NotCyclic("centralizer enumeration needs a cyclic matrix")
        return mode
    q, n, m = A.spec.order, A.n, F.nvars
    if m == 1 and q ** (n * n) <= budget.max_candidates:
        return Mode.FULL_SPACE
    if is_cyclic(A):
        return Mode.IN_CENTRALIZER
    return Mode.FULL_SPACE


def residue_solutions(Abar: Matrix, fbar: MultiPoly, mode: Mode = Mode.AUTO,
                      budget: Optional[SearchBudget] = None) -> list:
    """All tuples over F_p with f(B) = Abar, each tagged with its partial-derivative classes."""
    budget = budget or SearchBudget()
    if Abar.spec.ell != 1:
        raise SpecMismatch(f"residue search needs a matrix over F_p, got {Abar.spec}")
    mode = _resolve_mode(Abar, fbar, mode, budget)
    cyclic = is_cyclic(Abar)
    out = []
    for tup in _enumerate(Abar, fbar, mode, budget):
        classes = classify_partials(fbar, tup)
        liftable = cyclic and "neither" not in classes and "unit" in classes
        out.append(ResidueSolution(tup, classes, liftable))
    return out


def exhaustive_solutions_over_ring(A: Matrix, F: MultiPoly, budget: Optional[SearchBudget] = None,
                                   mode: Mode = Mode.AUTO) -> SolutionSet:
    """Every (pairwise commuting) tuple over O_l with F(B) = A.

    ``AUTO`` uses the full space for one variable when it fits the budget,
    and otherwise enumerates inside O_l[A] (which requires A cyclic).
    """
    budget = budget or SearchBudget()
    return _enumerate(A, F, _resolve_mode(A, F, mode, budget), budget)


@dataclass
class CrossCheckReport:
    attempted: bool
    reason: str = ""
    member: Optional[bool] = None
    reduces_to_seed: Optional[bool] = None
    mode: Optional[str] = None
    candidates: int = 0
    oracle_solutions: int = 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


def cross_check_lift(problem: LiftProblem, budget: Optional[SearchBudget] = None,
                     mode: Mode = Mode.AUTO) -> CrossCheckReport:
    """Differential test: the lifted tuple must belong to the brute-force solution set."""
    budget = budget or SearchBudget()
    try:
        validate_hypotheses(problem)
    except MatliftError as exc:
        return CrossCheckReport(False, reason=f"not attempted: {exc.code}")
    transcript = lift_to_length(problem)
    oracle = exhaustive_solutions_over_ring(problem.A, problem.F, budget, mode)
    sol = transcript.solution
    member = sol in oracle
    reduces = all(B.reduce(1) == s for B, s in zip(sol, problem.seed))
    if not (member and reduces):
        raise MismatchDetected(
            f"lifted solution member={member} reduces_to_seed={reduces} ({oracle.mode.value} oracle)")
    return CrossCheckReport(True, "ok", member, reduces, oracle.mode.value, oracle.candidates, len(oracle))
