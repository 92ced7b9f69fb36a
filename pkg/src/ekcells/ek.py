"""The Eliahou-Kervaire resolution of a stable monomial ideal.

Basis labels are admissible pairs (F, m): a minimal generator m together with
a strictly increasing index tuple F below max(m).  The differential sends
e(F, m) to

    sum_r (-1)^r x_{i_r} e(F - i_r, m)
      - sum_{i_r in B(F, m)} (-1)^r (x_{i_r} m / g(x_{i_r} m)) e(F - i_r, g(x_{i_r} m)),

with r the 1-based position of i_r in F and B(F, m) the subset of F whose
removal leaves an admissible pair for the shifted generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import FreeComplex
from .ideals import MonomialIdeal
from .monomials import Monomial

__all__ = ["AdmissiblePair", "admissible_pairs", "b_set", "ek_complex"]


@dataclass(frozen=True)
class AdmissiblePair:
    F: tuple
    m: Monomial

    def __post_init__(self):
        F = tuple(int(i) for i in self.F)
        object.__setattr__(self, "F", F)
        if any(i < 1 for i in F):
            raise ValueError(f"indices must be >= 1: {F}")
        if any(a >= b for a, b in zip(F, F[1:])):
            raise ValueError(f"index set must be strictly increasing: {F}")
        if F and F[-1] >= self.m.max_var():
            raise ValueError(f"max {F} must stay below max({self.m}) = {self.m.max_var()}")

    @property
    def q(self) -> int:
        return len(self.F)

    def drop(self, i: int) -> tuple:
        if i not in self.F:
            raise ValueError(f"{i} not in {self.F}")
        return tuple(k for k in self.F if k != i)

    def multidegree(self) -> Monomial:
        return Monomial.from_factors(self.m.n, self.F) * self.m

    def sort_key(self):
        # m by descending lex, then F lexicographically
        return (tuple(-e for e in self.m.exps), self.F)

    def __repr__(self):
        inner = ",".join(str(i) for i in self.F)
        return f"e({{{inner}}};{self.m})"


def admissible_pairs(ideal: MonomialIdeal, q: int) -> list:
    """All admissible pairs (F, m) with #F = q, in canonical order."""
    if q < 0:
        raise ValueError("homological degree must be >= 0")
    out = []
    for m in ideal.gens:  # already lex-descending
        out.extend(AdmissiblePair(F, m) for F in combinations(range(1, m.max_var()), q))
    return out


def b_set(ideal: MonomialIdeal, F, m: Monomial) -> tuple:
    """The indices i_r in F with (F - i_r, g(x_{i_r} m)) still admissible."""
    pair = AdmissiblePair(tuple(F), m)
    out = []
    for i in pair.F:
        shifted = ideal.g(m.times_var(i))
        bound = shifted.max_var()
        if all(k < bound for k in pair.F if k != i):
            out.append(i)
    return tuple(out)


def ek_complex(ideal: MonomialIdeal) -> FreeComplex:
    if not ideal.is_stable():
        raise ValueError("ideal is not stable")
    layers = []
    q = 0
    while True:
        layer = admissible_pairs(ideal, q)
        if not layer:
            break
        layers.append(layer)
        q += 1
    index = [{pair: k for k, pair in enumerate(layer)} for layer in layers]
    n = ideal.n

    diffs = []
    for q in range(1, len(layers)):
        mat = {}
        for col, pair in enumerate(layers[q]):
            bset = set(b_set(ideal, pair.F, pair.m))
            for r, i in enumerate(pair.F, start=1):
                sign = -1 if r % 2 else 1
                rest = pair.drop(i)
                row = index[q - 1][AdmissiblePair(rest, pair.m)]
                mat[(row, col)] = (sign, Monomial.variable(n, i))
                if i in bset:
                    shifted = ideal.g(pair.m.times_var(i))
                    coeff = pair.m.times_var(i).div(shifted)
                    row2 = index[q - 1][AdmissiblePair(rest, shifted)]
                    mat[(row2, col)] = (-sign, coeff)
        diffs.append(mat)

    return FreeComplex(
        kind="ek",
        ring=("S", n),
        basis=layers,
        mdegs=[[p.multidegree() for p in layer] for layer in layers],
        diffs=diffs,
    )
