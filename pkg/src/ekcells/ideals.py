"""Monomial ideals: minimal generators, the stability hierarchy, the
decomposition function g, height, and Cohen-Macaulay detection.

Membership in an ideal means divisibility by some minimal generator; no
further ideal arithmetic is implemented (none is needed by the resolution
constructions).
"""

from __future__ import annotations

from itertools import combinations

from .monomials import Monomial

__all__ = [
    "MonomialIdeal",
    "minimalize",
    "borel_closure",
    "random_borel_ideal",
    "parse_ideal",
    "read_ideal",
    "format_ideal",
]


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators.

    Generators are minimalized on construction and kept sorted in the
    descending lexicographic order (x_1 > ... > x_n), which is also the scan
    order used by the decomposition function :meth:`g`.  Instances are
    immutable; all queries are pure and cached where profitable.
    """

    __slots__ = ("n", "gens", "_stable", "_borel", "_sqfree_ss", "_g_cache")

    def __init__(self, n: int, gens):
        gens = list(gens)
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for m in gens:
            if not isinstance(m, Monomial):
                raise TypeError(f"expected Monomial, got {type(m).__name__}")
            if m.n != n:
                raise ValueError(f"generator {m} lives in {m.n} variables, not {n}")
            if m.is_unit():
                raise ValueError("the unit ideal is not supported")
        self.n = n
        self.gens = tuple(sorted(_minimal_subset(gens), reverse=True))
        self._stable = None
        self._borel = None
        self._sqfree_ss = None
        self._g_cache = {}

    # -- membership and basic data ------------------------------------------

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.n}; {', '.join(str(g) for g in self.gens)})"

    def max_deg(self) -> int:
        return max(m.degree() for m in self.gens)

    def max_max(self) -> int:
        """max { max(m) : m in G(I) }; the codimension candidate h."""
        return max(m.max_var() for m in self.gens)

    def top_generators(self) -> list:
        """Generators with max(m) = max_max(), sorted lex-ascending."""
        h = self.max_max()
        return sorted(m for m in self.gens if m.max_var() == h)

    # -- stability hierarchy --------------------------------------------------
    # Checking the exchange moves on the generators suffices for all three
    # predicates.

    def is_stable(self) -> bool:
        if self._stable is None:
            ok = True
            for m in self.gens:
                k = m.max_var()
                base = m.div_var(k)
                if any(base.times_var(i) not in self for i in range(1, k)):
                    ok = False
                    break
            self._stable = ok
        return self._stable

    def is_borel_fixed(self) -> bool:
        if self._borel is None:
            ok = True
            for m in self.gens:
                for j in m.support():
                    base = m.div_var(j)
                    if any(base.times_var(i) not in self for i in range(1, j)):
                        ok = False
                        break
                if not ok:
                    break
            self._borel = ok
        return self._borel

    def is_sqfree_strongly_stable(self) -> bool:
        if self._sqfree_ss is None:
            ok = all(m.is_squarefree() for m in self.gens)
            if ok:
                for m in self.gens:
                    for j in m.support():
                        base = m.div_var(j)
                        for i in range(1, j):
                            if m.deg(i) == 0 and base.times_var(i) not in self:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
            self._sqfree_ss = ok
        return self._sqfree_ss

    # -- the decomposition function g ----------------------------------------

    def g(self, m: Monomial, check: bool = False) -> Monomial:
        """The unique generator m0 dividing m with max(m0) <= min(m/m0).

        Computed as the lex-greatest generator dividing m (the two
        characterizations agree for stable ideals; pass ``check=True`` to
        verify the agreement on this call).
        """
        if not self.is_stable():
            raise ValueError("decomposition function needs a stable ideal")
        cached = self._g_cache.get(m)
        if cached is not None and not check:
            return cached
        result = None
        for m0 in self.gens:  # descending lex
            if m0.divides(m):
                result = m0
                break
        if result is None:
            raise ValueError(f"{m} is not in the ideal")
        if check:
            witnesses = []
            for m0 in self.gens:
                if not m0.divides(m):
                    continue
                q = m.div(m0)
                if q.is_unit() or m0.max_var() <= q.min_var():
                    witnesses.append(m0)
            if len(witnesses) != 1 or witnesses[0] != result:
                raise RuntimeError(
                    f"decomposition characterizations disagree on {m}: "
                    f"lex-greatest {result}, max/min witnesses {witnesses}"
                )
        self._g_cache[m] = result
        return result

    # -- height and Cohen-Macaulayness ----------------------------------------

    def height(self) -> int:
        """Minimum size of a variable set meeting every generator's support."""
        supports = [frozenset(m.support()) for m in self.gens]
        universe = sorted(frozenset().union(*supports))
        for size in range(1, len(universe) + 1):
            for cover in combinations(universe, size):
                cset = set(cover)
                if all(s & cset for s in supports):
                    return size
        raise AssertionError("unreachable: full support set is always a cover")

    def is_cm_stable(self):
        """(is_CM, h, l) for a stable ideal.

        CM holds iff height(I) equals h := max{max(m)}; in that case l is the
        unique exponent with x_h^l a minimal generator.
        """
        if not self.is_stable():
            raise ValueError("Cohen-Macaulay test implemented for stable ideals only")
        h = self.max_max()
        if self.height() != h:
            return (False, h, None)
        powers = [m.degree() for m in self.gens if m.support() == (h,)]
        if len(powers) != 1:
            raise RuntimeError(
                f"CM stable ideal without a unique pure power of x_{h}: "
                f"{self!r} (internal inconsistency)"
            )
        return (True, h, powers[0])


def minimalize(gens) -> MonomialIdeal:
    """The ideal generated by ``gens``, with redundant generators dropped."""
    gens = list(gens)
    if not gens:
        raise ValueError("cannot minimalize an empty generating set")
    return MonomialIdeal(gens[0].n, gens)


def _minimal_subset(gens):
    unique = set(gens)
    return [
        m
        for m in unique
        if not any(g is not m and g != m and g.divides(m) for g in unique)
    ]


def borel_closure(seeds) -> MonomialIdeal:
    """The smallest Borel fixed ideal containing the given monomials.

    Closes the generating set under all exchanges x_i * (m / x_j), i < j;
    exchanges preserve degree, so the closure is finite.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("borel_closure needs at least one seed monomial")
    n = seeds[0].n
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for m in frontier:
            for j in m.support():
                base = m.div_var(j)
                for i in range(1, j):
                    m2 = base.times_var(i)
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
        frontier = nxt
    return MonomialIdeal(n, seen)


def random_borel_ideal(rng, max_n=4, max_deg=4, max_gens=12, cm=False) -> MonomialIdeal:
    """A random Borel fixed ideal within the given size bounds.

    Takes the Borel closure of a few random seed monomials, rejecting results
    with too many generators.  With ``cm=True`` a pure power of x_h is added
    before closing, which forces the Cohen-Macaulay property.
    """
    while True:
        n = rng.randint(2, max_n)
        seeds = []
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, max_deg)
            seeds.append(
                Monomial.from_factors(n, sorted(rng.randint(1, n) for _ in range(deg)))
            )
        if cm:
            h = max(m.max_var() for m in seeds)
            seeds.append(Monomial.variable(n, h) ** rng.randint(1, max_deg))
        ideal = borel_closure(seeds)
        if len(ideal.gens) > max_gens:
            continue
        if cm and not ideal.is_cm_stable()[0]:
            continue
        return ideal


# -- ideal files --------------------------------------------------------------
# Format: first data line "n <count>", then one monomial per line in either
# accepted syntax; lines starting with "#" are comments.


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty ideal file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f'expected header "n <count>", got {lines[0]!r}')
    n, count = int(head[0]), int(head[1])
    if n < 1 or count < 1:
        raise ValueError(f"invalid header values n={n}, count={count}")
    body = lines[1:]
    if len(body) != count:
        raise ValueError(f"header announces {count} generators, found {len(body)}")
    return MonomialIdeal(n, [Monomial.parse(ln, n) for ln in body])


def read_ideal(path) -> MonomialIdeal:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"{ideal.n} {len(ideal.gens)}"]
    lines.extend(str(m) for m in ideal.gens)
    return "\n".join(lines) + "\n"
