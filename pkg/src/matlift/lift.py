"""Hensel lifting of solutions of F(B_1, ..., B_m) = A for cyclic A.

A level-m solution is stored by its centralizer coordinates with respect to a
cyclic frame of A. One step (level m -> m+1):

1. lift every coordinate vector by canonical representatives, giving
   commuting matrices B_i in O_{m+1}[A];
2. the defect F(B) - A is pi^m C with C in O_{m+1}[A]; C is read off in
   coordinates;
3. each variable whose partial derivative is a unit at the seed receives the
   correction D_i = -C (w_i dF/dx_i(B))^{-1}, with weights w_i chosen so that
   sum_i 1/w_i = 1; variables with zero partial derivative are left alone;
4. B_i + pi^m D_i solves the equation at level m+1 because (pi^m)^2 = 0 there.

The weights are w_i = r for all r unit variables when p does not divide r;
otherwise 2(r-1) for the first r-1 of them and 2 for the last one.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .centralizer import (CentralizerCoords, CyclicFrame, coords_to_matrix, express_in_powers,
                          find_cyclic_frame, is_cyclic)
from .errors import (BadTarget, NoInvertiblePartial, NonUnitCorrectionDivisor, NotCyclic, NotMonic,
                     PartialNeitherUnitNorZero, SeedNotASolution, SeedNotCommuting, ShapeMismatch,
                     SpecMismatch, StepVerificationFailed)
from .matrix import Matrix, invert_matrix
from .polynomial import MultiPoly, eval_at_tuple
from .ring import RingSpec

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftProblem:
    """Lift ``seed`` (over F_p) to a solution of F(B) = A over O_L, L = A.spec.ell."""

    A: Matrix
    F: MultiPoly
    seed: tuple
    strict_monic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "seed", tuple(self.seed))

    @property
    def spec(self) -> RingSpec:
        return self.A.spec

    @property
    def nvars(self) -> int:
        return self.F.nvars

    def to_json(self) -> dict:
        spec = self.spec
        return {"ring": spec.to_json(), "A": self.A.to_json(), "F": self.F.to_json(),
                "seed": [B.to_json() for B in self.seed], "target_length": spec.ell,
                "strict_monic": self.strict_monic}


@dataclass(frozen=True)
class DerivativeProfile:
    unit_indices: tuple
    zero_indices: tuple
    permutation: tuple      # unit indices first, then zero indices
    p: int

    @property
    def r(self) -> int:
        return len(self.unit_indices)

    @property
    def case(self) -> str:
        """'I' when p does not divide r, else 'II'."""
        return "I" if self.r % self.p else "II"

    def weights(self) -> dict:
        """Integer weight w_i for every unit variable i."""
        r = self.r
        if self.case == "I":
            return {i: r for i in self.unit_indices}
        w = {i: 2 * (r - 1) for i in self.unit_indices[:-1]}
        w[self.unit_indices[-1]] = 2
        return w

    def to_json(self) -> dict:
        return {"unit_indices": list(self.unit_indices), "zero_indices": list(self.zero_indices),
                "r": self.r, "case": self.case, "permutation": list(self.permutation),
                "weights": {str(i): w for i, w in self.weights().items()}}


def weight_identity_holds(spec: RingSpec, profile: DerivativeProfile) -> bool:
    """Check sum_i w_i^{-1} == 1 in the ring ``spec``."""
    total = spec.sum(spec.inv(spec.from_int(w)) for w in profile.weights().values())
    return total == spec.one


def classify_partials(fbar: MultiPoly, seed: Sequence[Matrix]) -> list:
    """'unit', 'zero' or 'neither' for each partial derivative evaluated at ``seed``."""
    out = []
    for i in range(fbar.nvars):
        P = eval_at_tuple(fbar.partial(i), seed, check=False)
        if P.is_zero():
            out.append("zero")
        elif P.is_invertible():
            out.append("unit")
        else:
            out.append("neither")
    return out


def profile_from_classes(classes: Sequence[str], p: int) -> DerivativeProfile:
    for i, c in enumerate(classes):
        if c == "neither":
            raise PartialNeitherUnitNorZero(i)
    units = tuple(i for i, c in enumerate(classes) if c == "unit")
    zeros = tuple(i for i, c in enumerate(classes) if c == "zero")
    if not units:
        raise NoInvertiblePartial("no partial derivative is invertible at the seed")
    return DerivativeProfile(units, zeros, units + zeros, p)


def validate_hypotheses(problem: LiftProblem) -> DerivativeProfile:
    """Check every hypothesis of the lifting theorem and classify the partials."""
    A, F, seed = problem.A, problem.F, problem.seed
    spec = A.spec
    if F.spec != spec:
        raise SpecMismatch(f"polynomial over {F.spec}, matrix over {spec}")
    if len(seed) != F.nvars:
        raise ShapeMismatch(f"{F.nvars} variables but {len(seed)} seed matrices")
    k = spec.residue_field()
    for B in seed:
        if B.spec != k:
            raise SpecMismatch(f"seed matrices must be over {k}, got {B.spec}")
        if B.n != A.n:
            raise ShapeMismatch("seed matrices must have the size of A")
    if not is_cyclic(A):
        raise NotCyclic("A is not cyclic: its reduction has a minimal polynomial of degree < n")
    for i in range(len(seed)):
        for j in range(i + 1, len(seed)):
            if not seed[i].commutes_with(seed[j]):
                raise SeedNotCommuting(f"seed matrices {i} and {j} do not commute")
    fbar = F.reduce(1)
    if eval_at_tuple(fbar, seed, check=False) != A.reduce(1):
        raise SeedNotASolution("the seed does not solve the equation over the residue field")
    if F.nvars == 1 and not F.is_monic():
        if problem.strict_monic:
            raise NotMonic("F is not monic")
        warnings.warn("F is not monic; lifting proceeds (hypothesis check is advisory)", stacklevel=2)
    return profile_from_classes(classify_partials(fbar, seed), spec.p)


def hensel_step(A_next: Matrix, frame_next: CyclicFrame, F: MultiPoly, coords: Sequence[CentralizerCoords],
                profile: DerivativeProfile, m: int) -> tuple:
    """Lift level-m coordinates to level-(m+1) coordinates of a solution.

    ``A_next`` and ``frame_next`` live over O_{m+1}; ``F`` may be given over
    any longer ring of the tower and is reduced here.
    """
    spec = A_next.spec
    if spec.ell != m + 1:
        raise BadTarget(f"A_next must be over O_{m + 1}, got {spec}")
    if frame_next.spec != spec:
        raise SpecMismatch("frame and A_next live over different rings")
    F = F.reduce(m + 1)

    lifted = [c.lift_to(spec) for c in coords]
    Bs = [coords_to_matrix(frame_next, c) for c in lifted]
    defect = eval_at_tuple(F, Bs, check=False) - A_next
    e = express_in_powers(frame_next, defect)
    if any(spec.valuation(x) < m for x in e.coeffs):
        raise StepVerificationFailed(f"defect is not divisible by pi^{m}; the level-{m} input is not a solution")
    C = coords_to_matrix(frame_next, CentralizerCoords(spec, tuple(spec.div_pi_power(x, m) for x in e.coeffs)))

    pim = spec.pi_power(m)
    out = []
    for i, (B, c) in enumerate(zip(Bs, lifted)):
        w = profile.weights().get(i)
        if w is None:
            out.append(c)           # zero partial: correction D_i = 0
            continue
        divisor = eval_at_tuple(F.partial(i), Bs, check=False).scale(spec.from_int(w))
        if not divisor.is_invertible():
            raise NonUnitCorrectionDivisor(f"weighted partial {i} is not invertible at level {m + 1}")
        D = -(C @ invert_matrix(divisor))
        out.append(express_in_powers(frame_next, B + D.scale(pim)))

    new_Bs = [coords_to_matrix(frame_next, c) for c in out]
    if eval_at_tuple(F, new_Bs, check=False) != A_next:
        raise StepVerificationFailed(f"residual is nonzero after the step to level {m + 1}")
    for old, new in zip(coords, out):
        if new.reduce(m) != old:
            raise StepVerificationFailed(f"level-{m + 1} coordinates do not reduce to level {m}")
    return tuple(out)


@dataclass
class LevelRecord:
    level: int
    coords: tuple                 # CentralizerCoords per variable
    matrices: tuple               # Matrix per variable
    residual_zero: bool
    unit_witnesses: dict = field(default_factory=dict)   # variable -> det of the partial (a unit)

    def to_json(self) -> dict:
        spec = self.matrices[0].spec
        return {"level": self.level,
                "coords": [c.to_json() for c in self.coords],
                "matrices": [B.to_json() for B in self.matrices],
                "residual_zero": self.residual_zero,
                "unit_witnesses": {str(i): spec.to_json_value(d) for i, d in self.unit_witnesses.items()}}


@dataclass
class LiftTranscript:
    spec: RingSpec                # ring of the final level
    nvars: int
    profile: DerivativeProfile
    frame_vector: tuple
    levels: list = field(default_factory=list)

    @property
    def solution(self) -> tuple:
        return self.levels[-1].matrices

    @property
    def target_length(self) -> int:
        return self.levels[-1].level

    def to_json(self) -> dict:
        return {"ring": self.spec.to_json(), "target_length": self.target_length,
                "nvars": self.nvars, "profile": self.profile.to_json(),
                "cyclic_vector": [self.spec.to_json_value(x) for x in self.frame_vector],
                "levels": [rec.to_json() for rec in self.levels]}


def _record(level: int, frame: CyclicFrame, F: MultiPoly, A: Matrix, coords, profile) -> LevelRecord:
    Bs = tuple(coords_to_matrix(frame, c) for c in coords)
    residual_zero = eval_at_tuple(F, Bs, check=False) == A
    witnesses = {i: eval_at_tuple(F.partial(i), Bs, check=False).det().value for i in profile.unit_indices}
    return LevelRecord(level, tuple(coords), Bs, residual_zero, witnesses)


def _iterate_levels(problem: LiftProblem, bound: Optional[int] = None) -> Iterator[tuple]:
    """Yield (profile, frame, LevelRecord) for levels 1..bound."""
    profile = validate_hypotheses(problem)
    spec = problem.spec
    bound = spec.ell if bound is None else bound
    if not 1 <= bound <= spec.ell:
        raise BadTarget(f"target length {bound} outside 1..{spec.ell}")
    frame_top = find_cyclic_frame(problem.A.reduce(bound))
    frame = frame_top.reduce(1)
    coords = tuple(express_in_powers(frame, B) for B in problem.seed)
    rec = _record(1, frame, problem.F.reduce(1), problem.A.reduce(1), coords, profile)
    yield profile, frame_top, rec
    for m in range(1, bound):
        frame = frame_top.reduce(m + 1)
        A_next = problem.A.reduce(m + 1)
        coords = hensel_step(A_next, frame, problem.F, coords, profile, m)
        rec = _record(m + 1, frame, problem.F.reduce(m + 1), A_next, coords, profile)
        log.debug("lifted to level %d", m + 1)
        yield profile, frame_top, rec


def lift_to_length(problem: LiftProblem, target_length: Optional[int] = None) -> LiftTranscript:
    """Lift the seed level by level up to ``target_length`` (default: the length of A's ring)."""
    transcript = None
    for profile, frame, rec in _iterate_levels(problem, target_length):
        if transcript is None:
            transcript = LiftTranscript(frame.spec, problem.nvars, profile, frame.v)
        transcript.levels.append(rec)
    return transcript


def stream_levels(problem: LiftProblem, bound: Optional[int] = None) -> Iterator[tuple]:
    """Lazily yield the solution tuple at levels 1, 2, ..., bound."""
    for _, _, rec in _iterate_levels(problem, bound):
        yield rec.matrices
