"""Exact arithmetic in the truncated local rings Z/p^l and F_p[u]/(u^l).

Two representations are used side by side:

* raw values, which is what the matrix and polynomial code manipulates: a
  Python ``int`` in ``[0, p**l)`` for the integer family and a length-``l``
  tuple of residues mod ``p`` (lowest power of ``u`` first) for the series
  family;
* :class:`RingElement`, a small immutable wrapper pairing a raw value with its
  :class:`RingSpec`, for callers who want operator syntax.

All raw values produced by :class:`RingSpec` methods are canonical, so equality
of raw values is equality in the ring.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

from .errors import BadTarget, InsufficientValuation, NonUnit, SpecMismatch

Raw = Union[int, tuple]


class Family(str, enum.Enum):
    INT = "int"          # Z / p^l
    SERIES = "series"    # F_p[u] / (u^l)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """The ring O_l: prime ``p``, length ``ell`` and family.

    The uniformizer is ``p`` for :attr:`Family.INT` and ``u`` for
    :attr:`Family.SERIES`.
    """

    p: int
    ell: int
    family: Family = Family.INT

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not _is_prime(self.p) or self.p < 3:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")

    # ------------------------------------------------------------------ meta
    @property
    def is_series(self) -> bool:
        return self.family is Family.SERIES

    @cached_property
    def modulus(self) -> int:
        """p**ell; also the cardinality of the ring for both families."""
        return self.p ** self.ell

    @property
    def order(self) -> int:
        return self.modulus

    def at_length(self, ell: int) -> "RingSpec":
        if ell == self.ell:
            return self
        return RingSpec(self.p, ell, self.family)

    def residue_field(self) -> "RingSpec":
        return self.at_length(1)

    def same_tower(self, other: "RingSpec") -> bool:
        return self.p == other.p and self.family is other.family

    def __str__(self):
        if self.is_series:
            return f"F_{self.p}[u]/(u^{self.ell})"
        return f"Z/{self.p}^{self.ell}"

    def to_json(self) -> dict:
        return {"p": self.p, "ell": self.ell, "family": self.family.value}

    @classmethod
    def from_json(cls, data: dict) -> "RingSpec":
        return cls(int(data["p"]), int(data["ell"]), Family(data.get("family", "int")))

    # ------------------------------------------------------- canonical forms
    @cached_property
    def zero(self) -> Raw:
        return (0,) * self.ell if self.is_series else 0

    @cached_property
    def one(self) -> Raw:
        return (1,) + (0,) * (self.ell - 1) if self.is_series else 1

    @cached_property
    def pi(self) -> Raw:
        return self.pi_power(1)

    def pi_power(self, v: int) -> Raw:
        if v >= self.ell:
            return self.zero
        if self.is_series:
            return tuple(1 if k == v else 0 for k in range(self.ell))
        return self.p ** v

    def from_int(self, k: int) -> Raw:
        """Image of the integer ``k`` under Z -> O_l."""
        if self.is_series:
            return ((k % self.p),) + (0,) * (self.ell - 1)
        return k % self.modulus

    def canon(self, value) -> Raw:
        """Canonical raw value from an int (either family) or a coefficient sequence."""
        if self.is_series:
            if isinstance(value, int):
                return self.from_int(value)
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.ell:
                coeffs = coeffs[: self.ell]
            return tuple(coeffs) + (0,) * (self.ell - len(coeffs))
        if not isinstance(value, int):
            raise TypeError(f"expected an int for {self}, got {value!r}")
        return value % self.modulus

    def elements(self) -> Iterator[Raw]:
        """All ring elements in lexicographic order of canonical representatives."""
        if self.is_series:
            return itertools.product(range(self.p), repeat=self.ell)
        return iter(range(self.modulus))

    def index_of(self, x: Raw) -> int:
        """Position of ``x`` in :meth:`elements`."""
        if self.is_series:
            idx = 0
            for c in x:
                idx = idx * self.p + c
            return idx
        return x

    def element_at(self, idx: int) -> Raw:
        if self.is_series:
            digits = []
            for _ in range(self.ell):
                idx, d = divmod(idx, self.p)
                digits.append(d)
            return tuple(reversed(digits))
        return idx

    # ------------------------------------------------------------ arithmetic
    def add(self, x: Raw, y: Raw) -> Raw:
        if self.is_series:
            p = self.p
            return tuple((a + b) % p for a, b in zip(x, y))
        return (x + y) % self.modulus

    def sub(self, x: Raw, y: Raw) -> Raw:
        if self.is_series:
            p = self.p
            return tuple((a - b) % p for a, b in zip(x, y))
        return (x - y) % self.modulus

    def neg(self, x: Raw) -> Raw:
        if self.is_series:
            return tuple(-a % self.p for a in x)
        return -x % self.modulus

    def mul(self, x: Raw, y: Raw) -> Raw:
        if self.is_series:
            n = self.ell
            out = [0] * n
            for i, a in enumerate(x):
                if a:
                    for j in range(n - i):
                        out[i + j] += a * y[j]
            p = self.p
            return tuple(c % p for c in out)
        return (x * y) % self.modulus

    def dot(self, xs, ys) -> Raw:
        """Sum of products, reducing once at the end."""
        if self.is_series:
            n = self.ell
            out = [0] * n
            for x, y in zip(xs, ys):
                for i, a in enumerate(x):
                    if a:
                        for j in range(n - i):
                            out[i + j] += a * y[j]
            p = self.p
            return tuple(c % p for c in out)
        return sum(x * y for x, y in zip(xs, ys)) % self.modulus

    def sum(self, xs) -> Raw:
        if self.is_series:
            acc = [0] * self.ell
            for x in xs:
                for k, c in enumerate(x):
                    acc[k] += c
            return tuple(c % self.p for c in acc)
        return sum(xs) % self.modulus

    def is_zero(self, x: Raw) -> bool:
        return x == self.zero

    def is_unit(self, x: Raw) -> bool:
        if self.is_series:
            return x[0] != 0
        return x % self.p != 0

    def inv(self, x: Raw) -> Raw:
        if not self.is_unit(x):
            raise NonUnit(f"{self.show(x)} is not a unit in {self}")
        if not self.is_series:
            return pow(x, -1, self.modulus)
        p = self.p
        a0_inv = pow(x[0], -1, p)
        out = [a0_inv]
        for k in range(1, self.ell):
            s = sum(x[j] * out[k - j] for j in range(1, k + 1))
            out.append(-a0_inv * s % p)
        return tuple(out)

    def valuation(self, x: Raw) -> int:
        """Largest v <= ell with x in (pi^v); the zero element has valuation ell."""
        if self.is_series:
            for k, c in enumerate(x):
                if c:
                    return k
            return self.ell
        if x == 0:
            return self.ell
        v = 0
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v

    def div_pi_power(self, x: Raw, v: int) -> Raw:
        """Floor quotient of ``x`` by pi^v.

        The quotient is only determined modulo pi^(ell - v); the representative
        returned is the integer floor quotient (resp. the coefficient shift),
        whose top ``v`` digits are zero.
        """
        if v < 0:
            raise ValueError("v must be non-negative")
        if self.valuation(x) < v:
            raise InsufficientValuation(
                f"{self.show(x)} is not divisible by pi^{v} in {self}"
            )
        if self.is_series:
            return x[v:] + (0,) * min(v, self.ell)
        return x // self.p ** v

    def reduce(self, x: Raw, target_ell: int) -> Raw:
        """Image of ``x`` in O_target."""
        if not 1 <= target_ell <= self.ell:
            raise BadTarget(f"cannot reduce from length {self.ell} to {target_ell}")
        if self.is_series:
            return x[:target_ell]
        return x % self.p ** target_ell

    def lift(self, x: Raw, source_ell: int) -> Raw:
        """Canonical lift of a raw value from O_source into this ring (same integer / zero-padded)."""
        if source_ell > self.ell:
            raise BadTarget(f"cannot lift from length {source_ell} into length {self.ell}")
        if self.is_series:
            return tuple(x) + (0,) * (self.ell - source_ell)
        return x

    def show(self, x: Raw) -> str:
        if self.is_series:
            return "[" + ",".join(map(str, x)) + "]"
        return str(x)

    def to_json_value(self, x: Raw):
        return list(x) if self.is_series else x

    # --------------------------------------------------------- convenience
    def __call__(self, value) -> "RingElement":
        return RingElement(self, self.canon(value))


@dataclass(frozen=True)
class RingElement:
    """An element of O_l together with its ring."""

    spec: RingSpec
    value: Raw

    def _check(self, other) -> Raw:
        if isinstance(other, RingElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec} vs {other.spec}")
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return RingElement(self.spec, self.spec.add(self.value, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return RingElement(self.spec, self.spec.sub(self.value, y))

    def __rsub__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return RingElement(self.spec, self.spec.sub(y, self.value))

    def __mul__(self, other):
        y = self._check(other)
        if y is NotImplemented:
            return y
        return RingElement(self.spec, self.spec.mul(self.value, y))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.spec, self.spec.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == self.spec.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def is_unit(self) -> bool:
        return self.spec.is_unit(self.value)

    def inverse(self) -> "RingElement":
        return RingElement(self.spec, self.spec.inv(self.value))

    def valuation(self) -> int:
        return self.spec.valuation(self.value)

    def divide_by_pi_power(self, v: int) -> "RingElement":
        return RingElement(self.spec, self.spec.div_pi_power(self.value, v))

    def reduce(self, target_ell: int) -> "RingElement":
        value = self.spec.reduce(self.value, target_ell)
        return RingElement(self.spec.at_length(target_ell), value)

    def to_json(self):
        return self.spec.to_json_value(self.value)

    def __repr__(self):
        return f"{self.spec.show(self.value)} in {self.spec}"


# Function forms of the element operations.

def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def sub(x: RingElement, y: RingElement) -> RingElement:
    return x - y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def is_unit(x: RingElement) -> bool:
    return x.is_unit()


def invert_unit(x: RingElement) -> RingElement:
    return x.inverse()


def valuation(x: RingElement) -> int:
    return x.valuation()


def divide_by_pi_power(x: RingElement, v: int) -> RingElement:
    return x.divide_by_pi_power(v)


def reduce(x: RingElement, target_ell: int) -> RingElement:
    return x.reduce(target_ell)
