"""Dense square matrices over O_l and univariate polynomials over O_l."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadTarget, NotInvertible, ShapeMismatch, SpecMismatch
from .ring import Raw, RingElement, RingSpec


def _raw(spec: RingSpec, c) -> Raw:
    if isinstance(c, RingElement):
        if c.spec != spec:
            raise SpecMismatch(f"{c.spec} vs {spec}")
        return c.value
    return spec.canon(c)


@dataclass(frozen=True)
class Matrix:
    """An n x n matrix over ``spec``; ``rows`` holds canonical raw values."""

    spec: RingSpec
    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        if n < 1 or any(len(r) != n for r in self.rows):
            raise ShapeMismatch("matrix must be square with n >= 1")

    # ---------------------------------------------------------- construction
    @classmethod
    def from_rows(cls, spec: RingSpec, rows: Sequence[Sequence]) -> "Matrix":
        return cls(spec, tuple(tuple(_raw(spec, c) for c in row) for row in rows))

    @classmethod
    def identity(cls, spec: RingSpec, n: int) -> "Matrix":
        z, o = spec.zero, spec.one
        return cls(spec, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, spec: RingSpec, n: int) -> "Matrix":
        return cls(spec, ((spec.zero,) * n,) * n)

    @classmethod
    def diag(cls, spec: RingSpec, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [_raw(spec, v) for v in values]
        return cls(spec, tuple(tuple(vals[i] if i == j else spec.zero for j in range(n)) for i in range(n)))

    @classmethod
    def companion(cls, spec: RingSpec, coeffs: Sequence) -> "Matrix":
        """Companion matrix of the monic polynomial t^n + c_{n-1} t^{n-1} + ... + c_0.

        ``coeffs`` lists c_0, ..., c_{n-1}. The first standard basis vector is
        a cyclic vector.
        """
        n = len(coeffs)
        cs = [_raw(spec, c) for c in coeffs]
        rows = []
        for i in range(n):
            row = [spec.zero] * n
            if i > 0:
                row[i - 1] = spec.one
            row[n - 1] = spec.neg(cs[i])
            rows.append(tuple(row))
        return cls(spec, tuple(rows))

    # ----------------------------------------------------------------- basics
    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> RingElement:
        i, j = ij
        return RingElement(self.spec, self.rows[i][j])

    def tolist(self) -> list:
        return [[self.spec.to_json_value(x) for x in row] for row in self.rows]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": self.tolist()}

    @classmethod
    def from_json(cls, spec: RingSpec, data) -> "Matrix":
        entries = data["entries"] if isinstance(data, dict) else data
        m = cls.from_rows(spec, entries)
        if isinstance(data, dict) and "n" in data and int(data["n"]) != m.n:
            raise ShapeMismatch(f"declared n={data['n']} but entries are {m.n}x{m.n}")
        return m

    def __repr__(self):
        body = "; ".join(" ".join(self.spec.show(x) for x in row) for row in self.rows)
        return f"Matrix[{self.spec}]({body})"

    def _compat(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")
        if other.n != self.n:
            raise ShapeMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    # ------------------------------------------------------------- arithmetic
    def __add__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        add = self.spec.add
        return Matrix(self.spec, tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        sub = self.spec.sub
        return Matrix(self.spec, tuple(tuple(sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        neg = self.spec.neg
        return Matrix(self.spec, tuple(tuple(neg(a) for a in r) for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        cols = list(zip(*other.rows))
        dot = self.spec.dot
        return Matrix(self.spec, tuple(tuple(dot(r, c) for c in cols) for r in self.rows))

    def scale(self, c) -> "Matrix":
        c = _raw(self.spec, c)
        mul = self.spec.mul
        return Matrix(self.spec, tuple(tuple(mul(c, a) for a in r) for r in self.rows))

    def apply(self, vec: Sequence[Raw]) -> tuple:
        """Matrix-vector product on raw vectors."""
        dot = self.spec.dot
        return tuple(dot(r, vec) for r in self.rows)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative powers are not supported; use inverse()")
        result = Matrix.identity(self.spec, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        z = self.spec.zero
        return all(a == z for r in self.rows for a in r)

    def commutes_with(self, other: "Matrix") -> bool:
        return self @ other == other @ self

    def transpose(self) -> "Matrix":
        return Matrix(self.spec, tuple(zip(*self.rows)))

    def valuation(self) -> int:
        """Minimum valuation over the entries (ell for the zero matrix)."""
        val = self.spec.valuation
        return min(val(a) for r in self.rows for a in r)

    def div_pi_power(self, v: int) -> "Matrix":
        d = self.spec.div_pi_power
        return Matrix(self.spec, tuple(tuple(d(a, v) for a in r) for r in self.rows))

    # -------------------------------------------------------------- reduction
    def reduce(self, target_ell: int) -> "Matrix":
        if not 1 <= target_ell <= self.spec.ell:
            raise BadTarget(f"cannot reduce from length {self.spec.ell} to {target_ell}")
        if target_ell == self.spec.ell:
            return self
        red = self.spec.reduce
        return Matrix(self.spec.at_length(target_ell),
                      tuple(tuple(red(a, target_ell) for a in r) for r in self.rows))

    def lift_to(self, spec: RingSpec) -> "Matrix":
        """Entry-wise canonical lift into a longer ring of the same tower."""
        if not spec.same_tower(self.spec):
            raise SpecMismatch(f"{self.spec} and {spec} are not in the same tower")
        lift = spec.lift
        src = self.spec.ell
        return Matrix(spec, tuple(tuple(lift(a, src) for a in r) for r in self.rows))

    # ---------------------------------------------------------- determinants
    def charpoly(self) -> "UniPoly":
        return charpoly(self)

    def det(self) -> RingElement:
        return det(self)

    def is_invertible(self) -> bool:
        return self.spec.is_unit(det(self).value)

    def inverse(self) -> "Matrix":
        return invert_matrix(self)


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over O_l, coefficients lowest degree first, trimmed."""

    spec: RingSpec
    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == self.spec.zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, spec: RingSpec, coeffs: Sequence) -> "UniPoly":
        return cls(spec, tuple(_raw(spec, c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.spec.one

    def __call__(self, A: Matrix) -> Matrix:
        """Evaluate at a matrix by Horner's rule."""
        if A.spec != self.spec:
            raise SpecMismatch(f"{self.spec} vs {A.spec}")
        result = Matrix.zeros(self.spec, A.n)
        ident = Matrix.identity(self.spec, A.n)
        for c in reversed(self.coeffs):
            result = result @ A + ident.scale(c)
        return result

    def reduce(self, target_ell: int) -> "UniPoly":
        red = self.spec.reduce
        return UniPoly(self.spec.at_length(target_ell), tuple(red(c, target_ell) for c in self.coeffs))

    def to_json(self) -> list:
        return [self.spec.to_json_value(c) for c in self.coeffs]

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c != self.spec.zero:
                terms.append(f"{self.spec.show(c)}*t^{k}" if k else self.spec.show(c))
        return f"UniPoly[{self.spec}]({' + '.join(terms) or '0'})"


# ---------------------------------------------------------------------------
# Division-free characteristic polynomial

def _berkowitz(spec: RingSpec, rows) -> list:
    """Coefficients of det(tI - A), highest degree first.

    Berkowitz's algorithm: the characteristic polynomial of the trailing
    principal submatrices is grown one row/column at a time by multiplying
    with a lower-triangular Toeplitz matrix. Only ring operations are used.
    """
    n = len(rows)
    neg, dot = spec.neg, spec.dot
    poly = [spec.one, neg(rows[n - 1][n - 1])]
    for k in range(n - 2, -1, -1):
        size = n - k
        R = rows[k][k + 1:]
        vec = [rows[i][k] for i in range(k + 1, n)]
        sub = [row[k + 1:] for row in rows[k + 1:]]
        col = [spec.one, neg(rows[k][k])]
        for _ in range(size - 1):
            col.append(neg(dot(R, vec)))
            vec = [dot(row, vec) for row in sub]
        new = []
        for r in range(size + 1):
            hi = min(r, size - 1)
            new.append(dot([col[r - c] for c in range(hi + 1)], poly[: hi + 1]))
        poly = new
    return poly


def charpoly(A: Matrix) -> UniPoly:
    """Monic characteristic polynomial det(tI - A)."""
    return UniPoly(A.spec, tuple(reversed(_berkowitz(A.spec, A.rows))))


def det(A: Matrix) -> RingElement:
    c0 = _berkowitz(A.spec, A.rows)[-1]
    return RingElement(A.spec, c0 if A.n % 2 == 0 else A.spec.neg(c0))


def is_invertible(A: Matrix) -> bool:
    return A.is_invertible()


def invert_matrix(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse pivoting only on unit entries.

    Over a local ring an invertible matrix always has a unit in the pivot
    column below the diagonal; the first such row is used.
    """
    spec, n = A.spec, A.n
    aug = [list(row) + [spec.one if i == j else spec.zero for j in range(n)]
           for i, row in enumerate(A.rows)]
    for k in range(n):
        piv = next((r for r in range(k, n) if spec.is_unit(aug[r][k])), None)
        if piv is None:
            raise NotInvertible(f"no unit pivot in column {k}; matrix is singular over {spec}")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = spec.inv(aug[k][k])
        aug[k] = [spec.mul(inv, x) for x in aug[k]]
        for r in range(n):
            if r != k and aug[r][k] != spec.zero:
                f = aug[r][k]
                aug[r] = [spec.sub(x, spec.mul(f, y)) for x, y in zip(aug[r], aug[k])]
    return Matrix(spec, tuple(tuple(row[n:]) for row in aug))


# Function forms

def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return A + B


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return A @ B


def scalar_mul(c, A: Matrix) -> Matrix:
    return A.scale(c)


def mat_reduce(A: Matrix, target_ell: int) -> Matrix:
    return A.reduce(target_ell)
