"""Structural checks on the constructed complexes and posets.

Each ``check_*`` function raises :class:`VerificationError` with a concrete
counterexample message on failure and returns quietly on success.
``full_battery`` / ``cm_battery`` bundle everything the randomized suites
assert per ideal.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .complexes import FreeComplex
from .ek import AdmissiblePair, ek_complex
from .ideals import MonomialIdeal
from .modified import (
    AdmissiblePairTilde,
    admissible_tilde,
    b_tilde_set,
    modified_complex,
)
from .monomials import BiMonomial, Monomial
from .polarization import (
    b_shift,
    bpol_ideal,
    bpol_monomial,
    g_shift,
    sigma_ideal,
    specialize_theta,
    specialize_theta_prime,
)
from .posets import BOTTOM, FinitePoset, build_gamma
from .shelling import ball_check, el_label_edge, is_cw_poset, u_of_chain
from .topology import euler_characteristic, frame_complex, strand_exactness

__all__ = ["VerificationError", "full_battery", "cm_battery"]


class VerificationError(Exception):
    pass


def _ensure(cond, msg):
    if not cond:
        raise VerificationError(msg)


# -- complex-level checks -----------------------------------------------------


def check_d2(cplx: FreeComplex):
    """Symbolic d o d = 0, coefficient monomials included."""
    for q in range(2, cplx.top + 1):
        outer = cplx.boundary(q)
        inner = cplx.boundary(q - 1)
        inner_cols = {}
        for (tgt, mid), entry in inner.items():
            inner_cols.setdefault(mid, []).append((tgt, entry))
        acc = {}
        for (mid, col), (s1, c1) in outer.items():
            for tgt, (s2, c2) in inner_cols.get(mid, ()):
                key = (col, tgt, c2 * c1)
                acc[key] = acc.get(key, 0) + s1 * s2
        bad = {k: v for k, v in acc.items() if v}
        _ensure(not bad, f"d^2 != 0 in {cplx.kind}: surviving terms {bad}")


def check_minimality(cplx: FreeComplex):
    for q in range(1, cplx.top + 1):
        for pos, (_, coeff) in cplx.boundary(q).items():
            _ensure(
                coeff.degree() >= 1,
                f"unit coefficient at {pos} in degree {q} of {cplx.kind}",
            )


def check_multidegrees(cplx: FreeComplex):
    """Every entry's coefficient is exactly the source/target degree quotient."""
    for q in range(1, cplx.top + 1):
        for (i, j), (_, coeff) in cplx.boundary(q).items():
            src = cplx.mdegs[q][j]
            tgt = cplx.mdegs[q - 1][i]
            _ensure(
                tgt * coeff == src,
                f"multidegree mismatch at ({i},{j}) in degree {q} of {cplx.kind}: "
                f"{tgt} * {coeff} != {src}",
            )


def check_pair_counts(ideal: MonomialIdeal, cplx: FreeComplex):
    """Enumerated basis sizes match the binomial count per generator."""
    for q in range(cplx.top + 2):
        expected = sum(comb(m.max_var() - 1, q) for m in ideal.gens)
        actual = len(cplx.basis[q]) if q <= cplx.top else 0
        _ensure(
            actual == expected,
            f"|A_{q}| = {actual}, binomial count gives {expected} ({cplx.kind})",
        )


def check_frame_invariance(cplx: FreeComplex, *specialized: FreeComplex):
    base = frame_complex(cplx)
    for other in specialized:
        fr = frame_complex(other)
        _ensure(
            fr.ranks == base.ranks and fr.mats == base.mats,
            f"frame of {other.kind} differs from frame of {cplx.kind}",
        )


def check_strands(cplx: FreeComplex, gens, primes=()):
    report = strand_exactness(cplx, gens, primes)
    _ensure(
        report.ok,
        f"strand exactness fails for {cplx.kind}: {report.first_failure()}",
    )
    return report


# -- decomposition function properties -----------------------------------------


def _monomials_up_to(n, deg):
    def rec(slot, remaining):
        if slot == n:
            yield ()
            return
        for e in range(remaining + 1):
            for rest in rec(slot + 1, remaining - e):
                yield (e,) + rest

    for exps in rec(0, deg):
        yield Monomial(exps)


def check_g_properties(ideal: MonomialIdeal, deg_bound=None):
    if deg_bound is None:
        deg_bound = ideal.max_deg() + 1
    members = [m for m in _monomials_up_to(ideal.n, deg_bound) if m in ideal]
    for m in members:
        ideal.g(m, check=True)  # lex-greatest divisor vs max/min witness
    for m in ideal.gens:
        for i in range(1, ideal.n + 1):
            gi = ideal.g(m.times_var(i))
            _ensure(gi >= m, f"g(x{i}*{m}) = {gi} is below {m}")
            _ensure(
                (gi == m) == (i >= m.max_var()),
                f"g(x{i}*{m}) = {m} fixpoint condition fails at i={i}",
            )
    small = [m for m in _monomials_up_to(ideal.n, 2)]
    for m in small:
        for nmem in members:
            if m.degree() + nmem.degree() > deg_bound + 2:
                continue
            lhs = ideal.g(m * ideal.g(nmem))
            rhs = ideal.g(m * nmem)
            _ensure(lhs == rhs, f"g({m}*g({nmem})) = {lhs} != g({m}*{nmem}) = {rhs}")


# -- poset-level checks ----------------------------------------------------------


def check_cover_support(poset: FinitePoset, cplx: FreeComplex):
    """The covers into each basis element match its differential column."""
    down = {e: set(poset.down_covers(e)) for e in poset.elements}
    for pair in cplx.basis[0]:
        _ensure(down[pair] == {BOTTOM}, f"{pair!r} should cover exactly the bottom")
    for q in range(1, cplx.top + 1):
        layer = cplx.basis[q]
        prev = cplx.basis[q - 1]
        col_targets = {}
        for (i, j), _ in cplx.boundary(q).items():
            col_targets.setdefault(j, set()).add(prev[i])
        for j, pair in enumerate(layer):
            _ensure(
                down[pair] == col_targets.get(j, set()),
                f"covers of {pair!r} differ from differential support",
            )


def check_thin(poset: FinitePoset, what: str):
    _ensure(poset.is_thin(), f"{what} is not thin")


def _label_map(kind, dual: FinitePoset, ideal):
    return {
        (a, b): el_label_edge(kind, a, b, ideal) for a, b in dual.covers
    }


def check_intervals(kind: str, dual: FinitePoset, ideal: MonomialIdeal) -> int:
    """One sweep over all intervals of the dual poset.

    Verifies, per interval: the EL conditions (unique weakly increasing
    maximal chain, strictly lex-least), injectivity of the labeling on
    chains, the lcm identity for the positive part of the increasing chain,
    the minimal-support characterization of the positive labels (classical
    kind), and realizability of the label swap / rotation rewrites.
    """
    labels_of = _label_map(kind, dual, ideal)
    checked = 0
    for a in dual.elements:
        for b in dual.up_set(a):
            if a == b:
                continue
            checked += 1
            chains = dual.chains_between(a, b)
            labels = [
                tuple(labels_of[(x, y)] for x, y in zip(c, c[1:])) for c in chains
            ]
            labelset = set(labels)
            _ensure(
                len(labelset) == len(labels),
                f"label tuples repeat on [{a!r}, {b!r}]",
            )
            inc = [lab for lab in labels if all(x <= y for x, y in zip(lab, lab[1:]))]
            _ensure(
                len(inc) == 1,
                f"{len(inc)} increasing maximal chains on [{a!r}, {b!r}]",
            )
            lab0 = inc[0]
            _ensure(
                all(lab0 < lab for lab in labels if lab != lab0),
                f"increasing chain not lex-least on [{a!r}, {b!r}]",
            )
            chain0 = chains[labels.index(lab0)]
            if b is not BOTTOM:
                u_of_chain(kind, chain0, ideal)  # raises on lcm mismatch
                if kind == "ek":
                    _check_minimal_support(ideal, a, b, lab0)
            _check_label_rewrites(kind, labels, labelset, a, b)
    return checked


def _check_minimal_support(ideal, a, b, lab0):
    diff = sorted(set(a.F) - set(b.F))
    hits = []
    for size in range(len(diff) + 1):
        for G in combinations(diff, size):
            if ideal.g(Monomial.from_factors(ideal.n, G) * a.m) == b.m:
                hits.append(set(G))
    minimal = [G for G in hits if not any(H < G for H in hits)]
    positive = {x for x in lab0 if x > 0}
    _ensure(
        len(minimal) == 1 and minimal[0] == positive,
        f"minimal shift supports {minimal} vs positive labels {positive} "
        f"on [{a!r}, {b!r}]",
    )


def _check_label_rewrites(kind, labels, labelset, a, b):
    for lab in labels:
        q = len(lab)
        for r in range(2, q + 1):
            prev_l, cur_l = lab[r - 2], lab[r - 1]
            if kind == "modified":
                swapped = lab[: r - 2] + (cur_l, prev_l) + lab[r:]
                if cur_l < 0:
                    _ensure(
                        swapped in labelset,
                        f"negative label not commutable in {lab} at {r} on [{a!r}, {b!r}]",
                    )
                if prev_l > 0 and swapped not in labelset:
                    replaced = lab[: r - 2] + (-prev_l,) + lab[r - 1 :]
                    _ensure(
                        replaced in labelset,
                        f"positive label not negatable in {lab} at {r} on [{a!r}, {b!r}]",
                    )
            else:
                if cur_l < 0:
                    rotated = (cur_l,) + lab[: r - 1] + lab[r:]
                    _ensure(
                        rotated in labelset,
                        f"negative label not rotatable in {lab} at {r} on [{a!r}, {b!r}]",
                    )


# -- polarization shift lemmas -----------------------------------------------------


def check_shift_instances(ideal: MonomialIdeal):
    """Pointwise checks of the exchange-shift identities on all admissible
    pairs: the lcm form of the removed variable, prefix agreement of the
    shifted generator, and the B-set stability and commutation statements."""
    for m in ideal.gens:
        for s in range(1, m.max_var()):
            fb = b_shift(m, s)
            _ensure(fb in ideal, f"exchange b_{s}({m}) = {fb} left the ideal")
            ms = g_shift(ideal, m, s)
            _ensure(
                all(ms.deg(l) == fb.deg(l) for l in range(1, s + 1)),
                f"m_<{s}> = {ms} disagrees with {fb} below slot {s}",
            )
            _ensure(ms.max_var() >= s, f"max(m_<{s}>) < {s} for m = {m}")
            _ensure(ms > m, f"m_<{s}> = {ms} not above m = {m}")

    q = 0
    while True:
        layer = admissible_tilde(ideal, q)
        if not layer:
            break
        for pair in layer:
            wm = pair.bimonomial()
            jmap = dict(pair.pairs)
            bset = set(b_tilde_set(ideal, pair.F, pair.m))
            for i in pair.F:
                wms = bpol_monomial(g_shift(ideal, pair.m, i))
                var = BiMonomial.variable(i, jmap[i])
                _ensure(
                    wm.lcm(wms).div(wm) == var,
                    f"lcm quotient of {pair!r} at {i} is not x[{i},{jmap[i]}]",
                )
            _check_bset_relations(ideal, pair, bset)
        q += 1


def _check_bset_relations(ideal, pair, bset):
    from .modified import b_tilde_set

    F, m = pair.F, pair.m
    if len(F) < 2:
        return
    shift = {i: g_shift(ideal, m, i) for i in F}
    for r in F:
        for s in F:
            if r == s:
                continue
            rest_s = tuple(k for k in F if k != s)
            if r in bset:
                _ensure(
                    r in b_tilde_set(ideal, rest_s, m),
                    f"{r} leaves the B set of {pair!r} after dropping {s}",
                )
            if r in bset and s in bset:
                sr = g_shift(ideal, shift[s], r) if r < shift[s].max_var() else None
                rs = g_shift(ideal, shift[r], s) if s < shift[r].max_var() else None
                _ensure(
                    sr is not None and rs is not None and sr == rs,
                    f"iterated shifts differ on {pair!r}: ({s},{r}) -> {sr}, "
                    f"({r},{s}) -> {rs}",
                )
                in_sr = r in b_tilde_set(ideal, rest_s, shift[s])
                rest_r = tuple(k for k in F if k != r)
                in_rs = s in b_tilde_set(ideal, rest_r, shift[r])
                _ensure(
                    in_sr == in_rs,
                    f"B-membership not symmetric for {r},{s} on {pair!r}",
                )
            if r not in bset and s in bset:
                in_shifted = r in b_tilde_set(ideal, rest_s, shift[s])
                in_plain = r in b_tilde_set(ideal, rest_s, m)
                _ensure(
                    in_shifted == in_plain,
                    f"mixed B-membership differs for {r} (after {s}) on {pair!r}",
                )
                if in_shifted:
                    _ensure(
                        shift[r] == g_shift(ideal, shift[s], r),
                        f"mixed iterated shift differs for {r},{s} on {pair!r}",
                    )


# -- Cohen-Macaulay structure -------------------------------------------------------


def _find_power_completion(ideal, base, h, min_l):
    cap = ideal.max_deg() + 1
    xh = Monomial.variable(ideal.n, h)
    gens = set(ideal.gens)
    for l in range(min_l, cap + 1):
        if base * (xh ** l) in gens:
            return l
    return None


def check_cm_generator_exchanges(ideal: MonomialIdeal, h: int):
    """For CM ideals: dropping any support variable of a generator can be
    completed back into a generator with a power of x_h (stable form), resp.
    with x_{k+1} and a power of x_h (Borel form)."""
    for m in ideal.gens:
        for k in m.support():
            _ensure(
                _find_power_completion(ideal, m.div_var(k), h, 1) is not None,
                f"no power of x{h} completes {m}/x{k} into a generator",
            )
    if ideal.is_borel_fixed():
        for m in ideal.gens:
            for k in m.support():
                if k >= h:
                    continue
                base = m.div_var(k).times_var(k + 1)
                _ensure(
                    base in ideal.gens or _find_power_completion(ideal, base, h, 1) is not None,
                    f"no power of x{h} completes ({m}/x{k})*x{k + 1} into a generator",
                )


def check_interval_decomposition(kind: str, ideal: MonomialIdeal, poset: FinitePoset, h: int):
    """The poset is the union of the lower intervals of the full pairs over
    the top-variable generators, and consecutive intersections are the
    predicted interval unions (classical) / have the predicted maximal
    elements (modified)."""
    tops = ideal.top_generators()
    full = tuple(range(1, h))
    make = AdmissiblePair if kind == "ek" else AdmissiblePairTilde
    full_pairs = [make(full, m) for m in tops]
    intervals = [set(poset.interval_set(BOTTOM, p)) for p in full_pairs]
    _ensure(
        set().union(*intervals) == set(poset.elements),
        f"{kind} poset is not covered by the full-pair intervals",
    )
    for jj in range(1, len(tops)):
        inter = set().union(*intervals[:jj]) & intervals[jj]
        m = tops[jj]
        expected_tops = {
            make(tuple(x for x in full if x != s), m)
            for s in m.support()
            if s != h
        }
        if kind == "ek":
            expected = set()
            for p in expected_tops:
                expected |= set(poset.interval_set(BOTTOM, p))
            _ensure(
                inter == expected,
                f"intersection with interval {jj} differs from predicted union ({kind})",
            )
        maximal = {
            x for x in inter if not any(y != x and poset.lt(x, y) for y in inter)
        }
        _ensure(
            maximal == expected_tops,
            f"maximal elements of intersection {jj} are {maximal}, "
            f"expected {expected_tops} ({kind})",
        )


# -- batteries ---------------------------------------------------------------------


def full_battery(ideal: MonomialIdeal, primes=(), strands=True) -> dict:
    """Everything the randomized suite asserts for one Borel fixed ideal."""
    _ensure(ideal.is_borel_fixed(), f"{ideal!r} is not Borel fixed")
    cek = ek_complex(ideal)
    cmod = modified_complex(ideal)
    ctheta = specialize_theta(cmod)
    cthetap = specialize_theta_prime(cmod)
    for c in (cek, cmod, ctheta, cthetap):
        check_d2(c)
        check_minimality(c)
        check_multidegrees(c)
    check_pair_counts(ideal, cek)
    check_pair_counts(ideal, cmod)
    _ensure(
        cek.ranks == cmod.ranks,
        f"classical ranks {cek.ranks} != modified ranks {cmod.ranks}",
    )
    check_frame_invariance(cmod, ctheta, cthetap)
    if strands:
        check_strands(cek, list(ideal.gens), primes)
        check_strands(cmod, bpol_ideal(ideal), primes)
        check_strands(ctheta, list(ideal.gens), primes)
        check_strands(cthetap, list(sigma_ideal(ideal).gens), primes)
    check_g_properties(ideal)
    check_shift_instances(ideal)

    stats = {"ranks": cek.ranks}
    for kind, cplx in (("ek", cek), ("modified", cmod)):
        poset = build_gamma(kind, ideal)
        check_cover_support(poset, cplx)
        check_thin(poset, f"{kind} poset of {ideal!r}")
        _ensure(len(poset.minimal_elements()) == 1, f"{kind} poset not bounded below")
        stats[f"intervals_{kind}"] = check_intervals(kind, poset.dual(), ideal)
        cw_ok, witness = is_cw_poset(poset, kind, ideal)
        _ensure(
            cw_ok and witness.get("el_failures") == 0,
            f"{kind} poset not certified CW: {witness}",
        )
    return stats


def cm_battery(ideal: MonomialIdeal, facet_budget=64, node_budget=500_000) -> dict:
    """Structure and ball certification for one Cohen-Macaulay Borel ideal."""
    is_cm, h, l_power = ideal.is_cm_stable()
    _ensure(is_cm, f"{ideal!r} is not Cohen-Macaulay")
    check_cm_generator_exchanges(ideal, h)
    stats = {"h": h, "l": l_power}
    for kind in ("ek", "modified"):
        poset = build_gamma(kind, ideal)
        _ensure(poset.is_pure(), f"{kind} poset of CM ideal not pure")
        _ensure(
            euler_characteristic(poset) == 1,
            f"{kind} poset of CM ideal has Euler characteristic != 1",
        )
        check_interval_decomposition(kind, ideal, poset, h)
        cw = is_cw_poset(poset, kind, ideal)
        _ensure(cw[0], f"{kind} poset not certified CW: {cw[1]}")
        verdict = ball_check(
            poset, kind, ideal,
            facet_budget=facet_budget, node_budget=node_budget, cw_result=cw,
        )
        _ensure(
            verdict.verdict == "ball-certified",
            f"{kind} ball check returned {verdict.verdict}: {verdict.detail}",
        )
        stats[f"facets_{kind}"] = len(poset.order_complex(drop_bottom=True).facets)
    return stats
