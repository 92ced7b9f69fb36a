"""Chain-complex linear algebra over the integers and the rationals.

Provides the frame (coefficient-free) complex of a free complex, Smith normal
form homology, simplicial homology of order complexes, the multigraded strand
exactness oracle certifying that a complex is a resolution, and cell-count
utilities on graded posets.

All arithmetic is exact: Smith normal form over Z for homology, fraction-free
Gaussian elimination for ranks over Q, optional re-checks modulo small primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .complexes import FreeComplex
from .posets import FinitePoset, SimplicialComplexData

__all__ = [
    "IntegerChainComplex",
    "frame_complex",
    "homology_ranks",
    "simplicial_chain_complex",
    "reduced_homology_trivial",
    "strand_exactness",
    "StrandReport",
    "face_counts",
    "euler_characteristic",
    "ridge_incidences",
    "rank_int",
    "smith_diagonal",
]


@dataclass
class IntegerChainComplex:
    """A bounded chain complex of free Z-modules.

    ``ranks[k]`` is the rank in degree ``bottom + k``; ``mats[k]`` is the
    boundary from degree ``bottom + k + 1`` to ``bottom + k`` as a dense
    row-major integer matrix of shape ranks[k] x ranks[k+1].
    """

    bottom: int
    ranks: list
    mats: list

    def __post_init__(self):
        if len(self.mats) != max(len(self.ranks) - 1, 0):
            raise ValueError("matrix count does not match rank count")
        for k, mat in enumerate(self.mats):
            if len(mat) != self.ranks[k]:
                raise ValueError(f"matrix {k} has {len(mat)} rows, expected {self.ranks[k]}")
            for row in mat:
                if len(row) != self.ranks[k + 1]:
                    raise ValueError(f"matrix {k} has a row of length {len(row)}")

    def degrees(self) -> range:
        return range(self.bottom, self.bottom + len(self.ranks))

    def check_composites(self):
        """Raise if consecutive boundaries do not compose to zero."""
        for k in range(len(self.mats) - 1):
            a, b = self.mats[k], self.mats[k + 1]
            for i in range(len(a)):
                for j in range(self.ranks[k + 2]):
                    s = sum(a[i][t] * b[t][j] for t in range(self.ranks[k + 1]))
                    if s:
                        raise ValueError(
                            f"boundaries out of degrees {self.bottom + k + 2} and "
                            f"{self.bottom + k + 1} do not compose to zero"
                        )


def frame_complex(cplx: FreeComplex, augmented: bool = False) -> IntegerChainComplex:
    """Replace every coefficient monomial by 1, keeping the signs.

    With ``augmented`` a rank-1 degree (-1) is appended below, receiving the
    all-ones row from degree 0 (the empty cell).
    """
    ranks = list(cplx.ranks)
    mats = []
    for q in range(1, cplx.top + 1):
        mat = [[0] * ranks[q] for _ in range(ranks[q - 1])]
        for (i, j), (sign, _) in cplx.boundary(q).items():
            mat[i][j] = sign
        mats.append(mat)
    if augmented:
        return IntegerChainComplex(-1, [1] + ranks, [[[1] * ranks[0]]] + mats)
    return IntegerChainComplex(0, ranks, mats)


# -- exact integer linear algebra ---------------------------------------------


def rank_int(mat) -> int:
    """Rank over Q of an integer matrix (fraction-free elimination)."""
    rows = [list(r) for r in mat if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        a = pr[col]
        for i in range(rank + 1, len(rows)):
            b = rows[i][col]
            if b:
                ri = rows[i]
                for j in range(col, ncols):
                    ri[j] = ri[j] * a - pr[j] * b
        rank += 1
        col += 1
    return rank


def rank_mod_p(mat, p: int) -> int:
    rows = [[x % p for x in r] for r in mat]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        pr = rows[rank]
        for j in range(col, ncols):
            pr[j] = pr[j] * inv % p
        for i in range(rank + 1, len(rows)):
            b = rows[i][col]
            if b:
                ri = rows[i]
                for j in range(col, ncols):
                    ri[j] = (ri[j] - b * pr[j]) % p
        rank += 1
        col += 1
    return rank


def smith_diagonal(mat) -> list:
    """The nonzero diagonal of the Smith normal form (invariant factors)."""
    a = [list(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    top = 0
    while top < m and top < n:
        # find a nonzero pivot of least absolute value
        piv = None
        best = None
        for i in range(top, m):
            for j in range(top, n):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            done = True
            for i in range(top + 1, m):
                if a[i][top]:
                    qt = a[i][top] // a[top][top]
                    for j in range(top, n):
                        a[i][j] -= qt * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        done = False
            for j in range(top + 1, n):
                if a[top][j]:
                    qt = a[top][j] // a[top][top]
                    for row in a:
                        row[j] -= qt * row[top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        done = False
            if done:
                break
        out.append(abs(a[top][top]))
        top += 1
    # enforce divisibility d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i + 1] % out[i]:
                g = math.gcd(out[i], out[i + 1])
                out[i], out[i + 1] = g, out[i] * out[i + 1] // g
                changed = True
    return out


def homology_ranks(cplx: IntegerChainComplex) -> list:
    """Integer homology per degree: (free rank, torsion invariants > 1).

    Entry k describes degree ``bottom + k``.  Raises when the input is not a
    complex.
    """
    cplx.check_composites()
    diag = [smith_diagonal(mat) for mat in cplx.mats]
    out = []
    for k, rk in enumerate(cplx.ranks):
        incoming = diag[k] if k < len(cplx.mats) else []
        outgoing = diag[k - 1] if k >= 1 else []
        betti = rk - len(incoming) - len(outgoing)
        torsion = tuple(d for d in incoming if d > 1)
        out.append((betti, torsion))
    return out


def simplicial_chain_complex(
    data: SimplicialComplexData, augmented: bool = True
) -> IntegerChainComplex:
    """The (reduced, when augmented) simplicial chain complex over Z."""
    by_dim = data.faces()
    ranks = [len(layer) for layer in by_dim]
    index = [{face: k for k, face in enumerate(layer)} for layer in by_dim]
    mats = []
    for d in range(1, len(by_dim)):
        mat = [[0] * ranks[d] for _ in range(ranks[d - 1])]
        for col, face in enumerate(by_dim[d]):
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1 :]
                mat[index[d - 1][sub]][col] = -1 if pos % 2 else 1
        mats.append(mat)
    if augmented:
        return IntegerChainComplex(-1, [1] + ranks, [[[1] * ranks[0]]] + mats)
    return IntegerChainComplex(0, ranks, mats)


def reduced_homology_trivial(data: SimplicialComplexData) -> bool:
    return all(
        betti == 0 and not torsion
        for betti, torsion in homology_ranks(simplicial_chain_complex(data))
    )


# -- multigraded strand exactness ------------------------------------------------


@dataclass
class StrandReport:
    ok: bool
    strands_checked: int
    primes: tuple
    failures: list = field(default_factory=list)

    def first_failure(self):
        return self.failures[0] if self.failures else None


def _lcm_lattice(gens) -> list:
    """All joins of nonempty subsets of the generator degrees."""
    lattice = set(gens)
    frontier = list(lattice)
    while frontier:
        nxt = []
        for b in frontier:
            for g in gens:
                j = b.lcm(g)
                if j not in lattice:
                    lattice.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(lattice, key=_degree_sort_key)


def _degree_sort_key(mono):
    if hasattr(mono, "exps"):
        return (0, mono.exps)
    return (1, mono.items())


def strand_exactness(cplx: FreeComplex, gens, primes=()) -> StrandReport:
    """Check that the complex resolves the ideal generated by ``gens``.

    For every multidegree b in the lcm lattice of the generators, restricts
    each free module to the basis elements whose degree divides b, restricts
    the differentials (entries become +-1), augments by the one-dimensional
    degree-b component of the ideal, and verifies exactness of the resulting
    complex over Q (and over F_p for each requested prime).
    """
    gens = list(gens)
    report = StrandReport(ok=True, strands_checked=0, primes=tuple(primes))
    for b in _lcm_lattice(gens):
        report.strands_checked += 1
        sub = [
            [k for k, md in enumerate(layer) if md.divides(b)] for layer in cplx.mdegs
        ]
        dims = [1] + [len(s) for s in sub]  # degree -1 is the ideal component
        mats = [[[1] * len(sub[0])]]
        for q in range(1, cplx.top + 1):
            rows = {k: i for i, k in enumerate(sub[q - 1])}
            mat = [[0] * len(sub[q]) for _ in sub[q - 1]]
            for j, col in enumerate(sub[q]):
                for (i, jj), (sign, _) in cplx.boundary(q).items():
                    if jj == col and i in rows:
                        mat[rows[i]][j] = sign
            mats.append(mat)
        ranks_q = [rank_int(m) for m in mats]
        defect = _exactness_defect(dims, ranks_q)
        if defect is not None:
            report.ok = False
            report.failures.append(
                {"degree": str(b), "field": "Q", "position": defect[0], "defect": defect[1]}
            )
            continue
        for p in primes:
            ranks_p = [rank_mod_p(m, p) for m in mats]
            defect = _exactness_defect(dims, ranks_p)
            if defect is not None:
                report.ok = False
                report.failures.append(
                    {"degree": str(b), "field": f"F{p}", "position": defect[0], "defect": defect[1]}
                )
                break
    return report


def _exactness_defect(dims, ranks_q):
    # dims[t] is the dimension at homological degree t - 1 (dims[0] = k);
    # ranks_q[t] is the rank of the map from dims[t + 1] into dims[t].
    for t in range(len(dims)):
        into = ranks_q[t] if t < len(ranks_q) else 0
        outof = ranks_q[t - 1] if t >= 1 else 0
        h = dims[t] - into - outof
        if h:
            return (t - 1, h)
    return None


# -- cell counting on graded posets ---------------------------------------------


def _cell_ranks(poset: FinitePoset):
    rankmap = poset.ranks()
    if rankmap is None:
        raise ValueError("poset is not graded")
    mins = poset.minimal_elements()
    if len(mins) != 1:
        raise ValueError("poset has no unique least element")
    return rankmap, mins[0]


def face_counts(poset: FinitePoset) -> tuple:
    """Cell counts per dimension, the least element not counted."""
    rankmap, bottom = _cell_ranks(poset)
    top = max(rankmap.values())
    counts = [0] * top
    for e in poset.elements:
        if e is not bottom:
            counts[rankmap[e] - 1] += 1
    return tuple(counts)


def euler_characteristic(poset: FinitePoset) -> int:
    return sum((-1) ** k * c for k, c in enumerate(face_counts(poset)))


def ridge_incidences(poset: FinitePoset) -> list:
    """(element, number of covering cells) for every corank-1 element."""
    rankmap, _ = _cell_ranks(poset)
    top = max(rankmap.values())
    return [
        (e, len(poset.up_covers(e))) for e in poset.elements if rankmap[e] == top - 1
    ]
