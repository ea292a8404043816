"""JSON problem files, solution files and their verification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .errors import MatliftError, ParseError, TowerMismatch, VerificationFailed
from .lift import LiftProblem
from .matrix import Matrix
from .polynomial import MultiPoly, eval_at_tuple
from .ring import RingSpec

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class ProblemFile:
    ring: RingSpec
    A: Matrix
    F: MultiPoly
    seed: Optional[tuple]
    target_length: int
    strict_monic: bool = False
    budget: int = DEFAULT_BUDGET

    def at_target(self) -> tuple:
        """(A, F) reduced to the target length."""
        return self.A.reduce(self.target_length), self.F.reduce(self.target_length)

    def lift_problem(self) -> LiftProblem:
        if self.seed is None:
            raise ParseError("problem file has no seed; run solve-residue to pick one")
        A, F = self.at_target()
        return LiftProblem(A, F, self.seed, strict_monic=self.strict_monic)

    def to_json(self) -> dict:
        data = {"ring": self.ring.to_json(), "A": self.A.to_json(), "F": self.F.to_json(),
                "target_length": self.target_length, "strict_monic": self.strict_monic,
                "budget": self.budget}
        if self.seed is not None:
            data["seed"] = [B.to_json() for B in self.seed]
        return data


def read_json(path: Union[str, Path]) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc})") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def parse_problem(data: dict) -> ProblemFile:
    try:
        ring = RingSpec.from_json(data["ring"])
        A = Matrix.from_json(ring, data["A"])
        F = MultiPoly.from_json(ring, data["F"])
        k = ring.residue_field()
        seed = None
        if data.get("seed") is not None:
            seed = tuple(Matrix.from_json(k, B) for B in data["seed"])
        target = int(data.get("target_length", ring.ell))
        strict = bool(data.get("strict_monic", False))
        budget = int(data.get("budget", DEFAULT_BUDGET))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, MatliftError) as exc:
        raise ParseError(f"invalid problem file: {type(exc).__name__}: {exc}") from exc
    if not 1 <= target <= ring.ell:
        raise ParseError(f"target_length {target} must lie in 1..{ring.ell}")
    return ProblemFile(ring, A, F, seed, target, strict, budget)


def load_problem(path: Union[str, Path]) -> ProblemFile:
    return parse_problem(read_json(path))


def solution_to_json(spec: RingSpec, matrices) -> dict:
    return {"ring": spec.to_json(), "level": spec.ell, "solution": [B.to_json() for B in matrices]}


def _first_difference(X: Matrix, Y: Matrix):
    for i, (r, s) in enumerate(zip(X.rows, Y.rows)):
        for j, (a, b) in enumerate(zip(r, s)):
            if a != b:
                return i, j
    return None


def verify_tuple(A: Matrix, F: MultiPoly, matrices) -> None:
    """Raise :class:`VerificationFailed` unless F(matrices) == A exactly."""
    value = eval_at_tuple(F, matrices)
    loc = _first_difference(value, A)
    if loc is not None:
        i, j = loc
        raise VerificationFailed(
            f"F(B) differs from A at entry ({i}, {j}) over {A.spec}: "
            f"{A.spec.show(value.rows[i][j])} != {A.spec.show(A.rows[i][j])}", location=loc)


def verify_solution(problem: ProblemFile, data: dict) -> dict:
    """Check a solution file or a lift transcript against ``problem``.

    Returns a summary dict; raises :class:`VerificationFailed` or
    :class:`TowerMismatch` on the first problem found.
    """
    try:
        if "levels" in data:
            ring = RingSpec.from_json(data["ring"])
            levels = []
            for rec in data["levels"]:
                spec = ring.at_length(int(rec["level"]))
                levels.append((spec, tuple(Matrix.from_json(spec, B) for B in rec["matrices"])))
        else:
            spec = RingSpec.from_json(data["ring"]).at_length(int(data["level"]))
            levels = [(spec, tuple(Matrix.from_json(spec, B) for B in data["solution"]))]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid solution file: {type(exc).__name__}: {exc}") from exc

    if not levels:
        raise VerificationFailed("no solutions to verify")
    for spec, _ in levels:
        if not spec.same_tower(problem.ring) or spec.ell > problem.ring.ell:
            raise VerificationFailed(f"solution ring {spec} is not a quotient of {problem.ring}")
    for (spec, mats) in levels:
        verify_tuple(problem.A.reduce(spec.ell), problem.F.reduce(spec.ell), mats)
    for (s0, prev), (s1, cur) in zip(levels, levels[1:]):
        if s1.ell != s0.ell + 1:
            raise TowerMismatch(f"levels {s0.ell} and {s1.ell} are not consecutive")
        for v, (a, b) in enumerate(zip(prev, cur)):
            if b.reduce(s0.ell) != a:
                raise TowerMismatch(f"variable {v} at level {s1.ell} does not reduce to level {s0.ell}",
                                    location=(s1.ell, v))
    if problem.seed is not None and levels[0][0].ell == 1 and levels[0][1] != problem.seed:
        raise TowerMismatch("level 1 differs from the seed", location=(1, None))
    return {"verified": True, "levels": [s.ell for s, _ in levels]}
