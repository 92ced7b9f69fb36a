"""The modified Eliahou-Kervaire resolution of the polarization of a Borel
fixed ideal.

Basis labels pair a minimal generator m of the small-ring ideal with an index
tuple F below max(m), exactly as in the classical resolution; the column
index j attached to each i in F is determined by m (one past the number of
factors of m that are <= i), so only the bare tuple is stored and the (i, j)
pair form is materialized on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import FreeComplex
from .ideals import MonomialIdeal
from .monomials import BiMonomial, Monomial
from .polarization import bpol_monomial, context_for, g_shift

__all__ = [
    "AdmissiblePairTilde",
    "j_index",
    "admissible_tilde",
    "b_tilde_set",
    "modified_complex",
]


def j_index(m: Monomial, i: int) -> int:
    """The column paired with row i for the generator m: 1 + sum of the
    exponents of m in the variables x_1..x_i."""
    if m.is_unit():
        raise ValueError("no column index for the unit monomial")
    if not 1 <= i < m.max_var():
        raise ValueError(f"need 1 <= i < max({m}) = {m.max_var()}, got {i}")
    return 1 + sum(m.exps[:i])


@dataclass(frozen=True)
class AdmissiblePairTilde:
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

    @property
    def pairs(self) -> tuple:
        """The (i, j) pair form of the index set."""
        return tuple((i, j_index(self.m, i)) for i in self.F)

    def bimonomial(self) -> BiMonomial:
        return bpol_monomial(self.m)

    def drop(self, i: int) -> tuple:
        if i not in self.F:
            raise ValueError(f"{i} not in {self.F}")
        return tuple(k for k in self.F if k != i)

    def multidegree(self) -> BiMonomial:
        return BiMonomial.from_factors(self.pairs) * self.bimonomial()

    def sort_key(self):
        return (tuple(-e for e in self.m.exps), self.F)

    def __repr__(self):
        inner = ",".join(f"({i},{j})" for i, j in self.pairs)
        return f"~e({{{inner}}};{self.m})"


def admissible_tilde(ideal: MonomialIdeal, q: int) -> list:
    """All admissible pairs for the polarized ideal with #F = q.

    Since j is a function of (m, i), the enumeration mirrors the classical
    one: all q-subsets of {1, ..., max(m) - 1} per generator.
    """
    if not ideal.is_borel_fixed():
        raise ValueError("ideal is not Borel fixed")
    if q < 0:
        raise ValueError("homological degree must be >= 0")
    out = []
    for m in ideal.gens:
        out.extend(
            AdmissiblePairTilde(F, m) for F in combinations(range(1, m.max_var()), q)
        )
    return out


def _pair_admissible_for(F, jmap, m2: Monomial) -> bool:
    # Retained (i, j) squares keep their original columns; admissibility for
    # the shifted generator needs both the i-bound and a matching recomputed j.
    bound = m2.max_var()
    return all(i < bound and j_index(m2, i) == jmap[i] for i in F)


def b_tilde_set(ideal: MonomialIdeal, F, m: Monomial) -> tuple:
    """The indices i_r in F whose removal pairs admissibly with m_<i_r>."""
    pair = AdmissiblePairTilde(tuple(F), m)
    jmap = {i: j for i, j in pair.pairs}
    out = []
    for i in pair.F:
        m2 = g_shift(ideal, m, i)
        if _pair_admissible_for(pair.drop(i), jmap, m2):
            out.append(i)
    return tuple(out)


def modified_complex(ideal: MonomialIdeal, d=None) -> FreeComplex:
    if not ideal.is_borel_fixed():
        raise ValueError("ideal is not Borel fixed")
    ctx = context_for(ideal, d)

    layers = []
    q = 0
    while True:
        layer = admissible_tilde(ideal, q)
        if not layer:
            break
        layers.append(layer)
        q += 1
    index = [{pair: k for k, pair in enumerate(layer)} for layer in layers]

    diffs = []
    for q in range(1, len(layers)):
        mat = {}
        for col, pair in enumerate(layers[q]):
            wm = pair.bimonomial()
            bset = set(b_tilde_set(ideal, pair.F, pair.m))
            jmap = {i: j for i, j in pair.pairs}
            for r, i in enumerate(pair.F, start=1):
                sign = -1 if r % 2 else 1
                rest = pair.drop(i)
                var = BiMonomial.variable(i, jmap[i])
                row = index[q - 1][AdmissiblePairTilde(rest, pair.m)]
                mat[(row, col)] = (sign, var)
                if i in bset:
                    m2 = g_shift(ideal, pair.m, i)
                    wm2 = bpol_monomial(m2)
                    try:
                        coeff = (var * wm).div(wm2)
                    except ValueError as exc:
                        raise RuntimeError(
                            f"differential coefficient not divisible at {pair!r}, "
                            f"i = {i}: {exc}"
                        ) from exc
                    row2 = index[q - 1][AdmissiblePairTilde(rest, m2)]
                    mat[(row2, col)] = (-sign, coeff)
        diffs.append(mat)

    return FreeComplex(
        kind="modified",
        ring=("S~", ideal.n, ctx.d),
        basis=layers,
        mdegs=[[p.multidegree() for p in layer] for layer in layers],
        diffs=diffs,
    )
