"""Sparse multivariate polynomials over O_l and their evaluation at commuting matrix tuples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BadTarget, NonCommutingTuple, ShapeMismatch, SpecMismatch
from .matrix import Matrix, UniPoly, _raw
from .ring import RingSpec


def _grlex_key(exps):
    return (sum(exps), exps)


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial in ``nvars`` commuting variables.

    ``terms`` maps exponent tuples to nonzero raw coefficients; it is kept as
    a tuple of pairs sorted in graded-lex order so instances are hashable and
    serialize canonically.
    """

    spec: RingSpec
    nvars: int
    terms: tuple

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("nvars must be >= 1")
        merged: dict = {}
        for exps, c in self.terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
            merged[exps] = self.spec.add(merged.get(exps, self.spec.zero), c)
        cleaned = tuple(sorted(((e, c) for e, c in merged.items() if c != self.spec.zero),
                               key=lambda t: _grlex_key(t[0])))
        object.__setattr__(self, "terms", cleaned)

    # ---------------------------------------------------------- construction
    @classmethod
    def from_dict(cls, spec: RingSpec, nvars: int, terms: Mapping) -> "MultiPoly":
        """``terms`` maps exponent tuples to ints / coefficient sequences / RingElements."""
        return cls(spec, nvars, tuple((tuple(e), _raw(spec, c)) for e, c in terms.items()))

    @classmethod
    def univariate(cls, spec: RingSpec, coeffs: Sequence) -> "MultiPoly":
        """From coefficients c_0, c_1, ... (lowest degree first)."""
        return cls(spec, 1, tuple(((k,), _raw(spec, c)) for k, c in enumerate(coeffs)))

    @classmethod
    def variable(cls, spec: RingSpec, nvars: int, i: int) -> "MultiPoly":
        exps = tuple(1 if k == i else 0 for k in range(nvars))
        return cls(spec, nvars, ((exps, spec.one),))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def to_unipoly(self) -> UniPoly:
        if self.nvars != 1:
            raise ValueError("not a univariate polynomial")
        coeffs = [self.spec.zero] * (self.degree + 1)
        for (k,), c in self.terms:
            coeffs[k] = c
        return UniPoly(self.spec, tuple(coeffs))

    def is_monic(self) -> bool:
        """Univariate only: leading coefficient equals one."""
        if self.nvars != 1:
            raise ValueError("monicity is only defined for univariate polynomials")
        return self.to_unipoly().is_monic()

    # ----------------------------------------------------------- arithmetic
    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._compat(other)
        return MultiPoly(self.spec, self.nvars, self.terms + other.terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.spec, self.nvars, tuple((e, self.spec.neg(c)) for e, c in self.terms))

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._compat(other)
            mul = self.spec.mul
            return MultiPoly(self.spec, self.nvars, tuple(
                (tuple(a + b for a, b in zip(e1, e2)), mul(c1, c2))
                for e1, c1 in self.terms for e2, c2 in other.terms))
        c = _raw(self.spec, other)
        return MultiPoly(self.spec, self.nvars, tuple((e, self.spec.mul(c, x)) for e, x in self.terms))

    __rmul__ = __mul__

    def _compat(self, other: "MultiPoly"):
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")
        if other.nvars != self.nvars:
            raise ValueError(f"{self.nvars} vs {other.nvars} variables")

    # ------------------------------------------------------------ reduction
    def reduce(self, target_ell: int) -> "MultiPoly":
        if not 1 <= target_ell <= self.spec.ell:
            raise BadTarget(f"cannot reduce from length {self.spec.ell} to {target_ell}")
        if target_ell == self.spec.ell:
            return self
        red = self.spec.reduce
        return MultiPoly(self.spec.at_length(target_ell), self.nvars,
                         tuple((e, red(c, target_ell)) for e, c in self.terms))

    def partial(self, i: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable ``i`` (0-based)."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = []
        for e, c in self.terms:
            if e[i]:
                de = e[:i] + (e[i] - 1,) + e[i + 1:]
                out.append((de, self.spec.mul(self.spec.from_int(e[i]), c)))
        return MultiPoly(self.spec, self.nvars, tuple(out))

    def gradient(self) -> list:
        return [self.partial(i) for i in range(self.nvars)]

    # ------------------------------------------------------------ evaluation
    def __call__(self, *Bs: Matrix, check: bool = True) -> Matrix:
        return eval_at_tuple(self, Bs, check=check)

    # --------------------------------------------------------- serialization
    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [{"exps": list(e), "coeff": self.spec.to_json_value(c)} for e, c in self.terms]}

    @classmethod
    def from_json(cls, spec: RingSpec, data: dict) -> "MultiPoly":
        nvars = int(data["nvars"])
        return cls(spec, nvars, tuple((tuple(t["exps"]), spec.canon(t["coeff"])) for t in data["terms"]))

    def __repr__(self):
        names = "t" if self.nvars == 1 else None
        parts = []
        for e, c in self.terms:
            mono = "*".join(
                (names or f"x{i}") + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e) if k)
            coef = self.spec.show(c)
            parts.append(f"{coef}*{mono}" if mono else coef)
        return f"MultiPoly[{self.spec}]({' + '.join(parts) or '0'})"


def check_commuting(Bs: Sequence[Matrix]) -> None:
    """Raise :class:`NonCommutingTuple` naming the first non-commuting pair."""
    for i in range(len(Bs)):
        for j in range(i + 1, len(Bs)):
            if not Bs[i].commutes_with(Bs[j]):
                raise NonCommutingTuple(i, j)


def eval_at_tuple(F: MultiPoly, Bs: Sequence[Matrix], check: bool = True) -> Matrix:
    """F(B_1, ..., B_m) for pairwise commuting matrices."""
    Bs = tuple(Bs)
    if len(Bs) != F.nvars:
        raise ShapeMismatch(f"polynomial has {F.nvars} variables, got {len(Bs)} matrices")
    n = Bs[0].n
    for B in Bs:
        if B.spec != F.spec:
            raise SpecMismatch(f"{F.spec} vs {B.spec}")
        if B.n != n:
            raise ShapeMismatch("matrices in the tuple have different sizes")
    if check and len(Bs) > 1:
        check_commuting(Bs)

    # powers[i][k] = B_i^k, built on demand
    powers = [[Matrix.identity(F.spec, n)] for _ in Bs]

    def power(i, k):
        pw = powers[i]
        while len(pw) <= k:
            pw.append(pw[-1] @ Bs[i])
        return pw[k]

    result = Matrix.zeros(F.spec, n)
    for exps, c in F.terms:
        mono = None
        for i, k in enumerate(exps):
            if k:
                mono = power(i, k) if mono is None else mono @ power(i, k)
        if mono is None:
            mono = powers[0][0]
        result = result + mono.scale(c)
    return result


def poly_reduce(F: MultiPoly, target_ell: int) -> MultiPoly:
    return F.reduce(target_ell)


def partial_derivative(F: MultiPoly, i: int) -> MultiPoly:
    return F.partial(i)


def taylor_linear_residual(F: MultiPoly, Xs: Sequence[Matrix], Ys: Sequence[Matrix]) -> Matrix:
    """F(X + Y) - F(X) - sum_i dF/dx_i(X) Y_i, the quadratic Taylor remainder."""
    Xs, Ys = tuple(Xs), tuple(Ys)
    check_commuting(Xs + Ys)
    shifted = tuple(x + y for x, y in zip(Xs, Ys))
    out = eval_at_tuple(F, shifted, check=False) - eval_at_tuple(F, Xs, check=False)
    for i, Y in enumerate(Ys):
        out = out - eval_at_tuple(F.partial(i), Xs, check=False) @ Y
    return out
