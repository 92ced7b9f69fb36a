"""Exact monomial arithmetic for k[x_1,...,x_n] and the doubly indexed ring
k[x_{i,j}].

Variable indices are 1-based throughout.  ``Monomial`` carries the
lexicographic order with x_1 > x_2 > ... > x_n on its comparison operators;
``BiMonomial`` is an unordered sparse exponent map.  Both types are immutable
and hashable, so they are safe to share freely (including across threads).
"""

from __future__ import annotations

import re

__all__ = ["Monomial", "BiMonomial", "lex_compare"]

_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?\Z")


class Monomial:
    """A monomial of k[x_1..x_n], stored as a dense exponent tuple."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if not exps:
            raise ValueError("variable count must be at least 1")
        if any(e < 0 for e in exps):
            raise ValueError(f"exponents must be nonnegative: {exps}")
        self.exps = exps

    # -- constructors ------------------------------------------------------

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @classmethod
    def from_factors(cls, n: int, indices) -> "Monomial":
        """Monomial with one factor x_i per entry of ``indices``."""
        exps = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} out of range 1..{n}")
            exps[i - 1] += 1
        return cls(exps)

    @classmethod
    def parse(cls, text: str, n: int) -> "Monomial":
        """Parse either an exponent vector ("2 0 1") or a product ("x1^2*x3")."""
        s = text.strip()
        if not s:
            raise ValueError("empty monomial string")
        if s == "1":
            return cls.unit(n)
        if "x" in s:
            exps = [0] * n
            for factor in s.split("*"):
                m = _FACTOR_RE.match(factor.strip())
                if m is None:
                    raise ValueError(f"cannot parse monomial factor {factor!r}")
                i = int(m.group(1))
                e = int(m.group(2)) if m.group(2) else 1
                if not 1 <= i <= n:
                    raise ValueError(f"variable index {i} out of range 1..{n}")
                exps[i - 1] += e
            return cls(exps)
        parts = s.split()
        if len(parts) != n:
            raise ValueError(f"expected {n} exponents, got {len(parts)}: {s!r}")
        return cls(int(p) for p in parts)

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def deg(self, i: int) -> int:
        """The exponent of x_i, i.e. the largest k with x_i^k dividing self."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        return self.exps[i - 1]

    def support(self) -> tuple:
        return tuple(i for i, e in enumerate(self.exps, 1) if e)

    def is_unit(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def max_var(self) -> int:
        for i in range(self.n, 0, -1):
            if self.exps[i - 1]:
                return i
        raise ValueError("max_var of the unit monomial")

    def min_var(self) -> int:
        for i in range(1, self.n + 1):
            if self.exps[i - 1]:
                return i
        raise ValueError("min_var of the unit monomial")

    def sorted_factors(self) -> list:
        """Variable indices with multiplicity, nondecreasing."""
        out = []
        for i, e in enumerate(self.exps, 1):
            out.extend([i] * e)
        return out

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Monomial"):
        if not isinstance(other, Monomial):
            raise TypeError(f"expected Monomial, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} != {other.n}")

    def divides(self, other: "Monomial") -> bool:
        self._check_ring(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_ring(other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if other does not divide self."""
        self._check_ring(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def times_var(self, i: int) -> "Monomial":
        return self * Monomial.variable(self.n, i)

    def div_var(self, i: int) -> "Monomial":
        return self.div(Monomial.variable(self.n, i))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power")
        return Monomial(e * k for e in self.exps)

    # -- order and identity --------------------------------------------------
    # Tuple comparison on dense exponent vectors is exactly the lexicographic
    # order with x_1 > x_2 > ... > x_n.

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        self._check_ring(other)
        return self.exps < other.exps

    def __le__(self, other):
        self._check_ring(other)
        return self.exps <= other.exps

    def __gt__(self, other):
        self._check_ring(other)
        return self.exps > other.exps

    def __ge__(self, other):
        self._check_ring(other)
        return self.exps >= other.exps

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if self.is_unit():
            return "1"
        parts = []
        for i, e in enumerate(self.exps, 1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


def lex_compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or +1 according to a < b, a == b, a > b in the lex order."""
    if a.n != b.n:
        raise ValueError(f"variable count mismatch: {a.n} != {b.n}")
    if a.exps == b.exps:
        return 0
    return 1 if a.exps > b.exps else -1


class BiMonomial:
    """A monomial of the doubly indexed ring k[x_{i,j}], stored sparsely.

    Keys are pairs (i, j) with i, j >= 1; zero exponents are never stored.
    """

    __slots__ = ("_exps", "_key")

    def __init__(self, exps):
        d = {}
        for key, e in dict(exps).items():
            i, j = key
            e = int(e)
            if e < 0:
                raise ValueError(f"exponents must be nonnegative: {exps}")
            if i < 1 or j < 1:
                raise ValueError(f"variable index pair {key} out of range")
            if e:
                d[(int(i), int(j))] = e
        self._exps = d
        self._key = tuple(sorted(d.items()))

    @classmethod
    def unit(cls) -> "BiMonomial":
        return cls({})

    @classmethod
    def variable(cls, i: int, j: int) -> "BiMonomial":
        return cls({(i, j): 1})

    @classmethod
    def from_factors(cls, pairs) -> "BiMonomial":
        d = {}
        for p in pairs:
            d[p] = d.get(p, 0) + 1
        return cls(d)

    def items(self):
        return self._key

    def exponent(self, i: int, j: int) -> int:
        return self._exps.get((i, j), 0)

    def variables(self) -> tuple:
        """Sorted index pairs of the variables dividing self."""
        return tuple(k for k, _ in self._key)

    def degree(self) -> int:
        return sum(self._exps.values())

    def is_unit(self) -> bool:
        return not self._exps

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self._exps.values())

    def divides(self, other: "BiMonomial") -> bool:
        oe = other._exps
        return all(e <= oe.get(k, 0) for k, e in self._exps.items())

    def lcm(self, other: "BiMonomial") -> "BiMonomial":
        d = dict(self._exps)
        for k, e in other._exps.items():
            if e > d.get(k, 0):
                d[k] = e
        return BiMonomial(d)

    def __mul__(self, other: "BiMonomial") -> "BiMonomial":
        d = dict(self._exps)
        for k, e in other._exps.items():
            d[k] = d.get(k, 0) + e
        return BiMonomial(d)

    def div(self, other: "BiMonomial") -> "BiMonomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        d = dict(self._exps)
        for k, e in other._exps.items():
            d[k] -= e
        return BiMonomial(d)

    def __eq__(self, other):
        return isinstance(other, BiMonomial) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"BiMonomial({self})"

    def __str__(self):
        if self.is_unit():
            return "1"
        parts = []
        for (i, j), e in self._key:
            parts.append(f"x[{i},{j}]" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)
