"""Acceptance suite: ten exact criteria, each printed as one PASS/FAIL line.

Run directly with ``python3 tests/test_acceptance.py`` or through pytest, where
the lines are repeated in the terminal summary.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter
from itertools import product
from math import comb

import pytest

from cyclicat import crossed, cyclic, delta, lifting, reedy, segal
from cyclicat import presheaf as ps

LIMIT_SECONDS = 60
RESULTS: dict[int, str] = {}


def _report(k: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    RESULTS[k] = line
    print(line)


# ---------------------------------------------------------------------------
# 1. hom counts


def winding_count(n: int, m: int) -> int:
    """Independent count: set maps on marked circles, weighted by their lifts.

    A set map winds once around the target (one lift) or is constant
    (``n + 1`` lifts, one per cut of the source); anything else has none.
    """
    M = m + 1
    total = 0
    for u in product(range(M), repeat=n + 1):
        if u.count(u[0]) == n + 1:
            total += n + 1
        elif sum((u[(i + 1) % (n + 1)] - u[i]) % M for i in range(n + 1)) == M:
            total += 1
    return total


def criterion_1():
    bad = []
    for n, m in product(range(7), repeat=2):
        formula = (n + 1) * comb(n + m + 1, n + 1)
        homs = cyclic.enumerate_hom(n, m)
        windows = len(set(homs))
        pairs = {(cyclic.canonical_factor(f).delta_part, cyclic.canonical_factor(f).rotation) for f in homs}
        all_pairs = {(f, r) for f in delta.iter_monotone(n, m) for r in range(n + 1)}
        data = {cyclic.to_underlying_data(f) for f in homs}
        counts = (cyclic.count_hom(n, m), windows, len(pairs), len(all_pairs), len(data), winding_count(n, m))
        if pairs != all_pairs or any(c != formula for c in counts):
            bad.append((n, m, counts))
    ok = not bad and cyclic.count_hom(1, 0) == 2
    return ok, f"hom counts triple-validated for n,m <= 6, count_hom(1,0) = {cyclic.count_hom(1, 0)}" + (
        f"; mismatches {bad[:3]}" if bad else "")


# ---------------------------------------------------------------------------
# 2. canonical factorization


def criterion_2():
    checked = 0
    for n, m in product(range(5), repeat=2):
        for phi in cyclic.iter_hom(n, m):
            if cyclic.from_canonical(cyclic.canonical_factor(phi)) != phi:
                return False, f"round trip fails at {phi}"
            checked += 1
        for f in delta.iter_monotone(n, m):
            for r in range(n + 1):
                pair = cyclic.CanonicalPair(f, r)
                if cyclic.canonical_factor(cyclic.from_canonical(pair)) != pair:
                    return False, f"converse fails at {pair}"
                checked += 1
    return True, f"both round trips exact on {checked} cases, n,m <= 4"


# ---------------------------------------------------------------------------
# 3. cyclic identities


def criterion_3():
    c = cyclic.compose_cyclic
    tau, d, s = cyclic.tau, cyclic.face, cyclic.degeneracy
    bad = []
    count = 0
    for n in range(7):
        power = cyclic.identity(n)
        for _ in range(n + 1):
            power = c(tau(n), power)
        rels = [(power, cyclic.identity(n))]
        if n >= 1:
            rels.append((c(tau(n), d(n, 0)), d(n, n)))
            rels += [(c(tau(n), d(n, i)), c(d(n, i - 1), tau(n - 1))) for i in range(1, n + 1)]
        if n + 1 <= 6:
            rels.append((c(tau(n), s(n, 0)), c(s(n, n), c(tau(n + 1), tau(n + 1)))))
            rels += [(c(tau(n), s(n, i)), c(s(n, i - 1), tau(n + 1))) for i in range(1, n + 1)]
        for k, (lhs, rhs) in enumerate(rels):
            count += 1
            if lhs != rhs:
                bad.append((n, k))
        # the rotation really has order exactly n + 1
        p, order = tau(n), 1
        while p != cyclic.identity(n):
            p, order = c(tau(n), p), order + 1
        if order != n + 1:
            bad.append((n, "order"))
    bad += cyclic.check_cyclic_identities(6) + delta.check_simplicial_identities(7)
    return not bad, f"{count} cyclic relations plus simplicial identities hold for n <= 6" + (f"; {bad[:3]}" if bad else "")


# ---------------------------------------------------------------------------
# 4. duality


def criterion_4():
    c = cyclic.compose_cyclic
    homs = {(a, b): cyclic.enumerate_hom(a, b) for a, b in product(range(5), repeat=2)}
    D = {f: cyclic.dual(f) for h in homs.values() for f in h}
    for (a, b), h in homs.items():
        image = [D[f] for f in h]
        if set(image) != set(homs[b, a]) or len(image) != len(set(image)):
            return False, f"dual not a bijection Hom({a},{b}) -> Hom({b},{a})"
        if any(D[D[f]] != f for f in h):
            return False, "dual not involutive"
    if any(D[cyclic.identity(n)] != cyclic.identity(n) for n in range(5)):
        return False, "dual does not fix identities"
    pairs = 0
    for b in range(5):
        into = [f for a in range(5) for f in homs[a, b]]
        out_of = [g for k in range(5) for g in homs[b, k]]
        for g in out_of:
            Dg = D[g]
            for f in into:
                pairs += 1
                if D[c(g, f)] != c(D[f], Dg):
                    return False, f"dual not contravariant at {g} o {f}"
    ipairs = 0
    for a, b, k in product(range(5), repeat=3):
        for f in delta.iter_monotone(a, b):
            Df = delta.interval_dual(f)
            if delta.interval_dual_inv(Df) != f:
                return False, f"interval dual round trip fails at {f}"
            for g in delta.iter_monotone(b, k):
                ipairs += 1
                if delta.interval_dual(delta.compose_ordinal(g, f)) != delta.compose_endpoint(Df, delta.interval_dual(g)):
                    return False, f"interval dual does not reverse {g} o {f}"
    for n, m in product(range(5), repeat=2):
        if {delta.interval_dual(f) for f in delta.iter_monotone(n, m)} != set(delta.enumerate_endpoint(m + 1, n + 1)):
            return False, f"interval dual not onto at ({n},{m})"
    return True, f"dual involutive, object-fixing, hom-bijective, contravariant on {pairs} pairs; interval dual on {ipairs} pairs"


# ---------------------------------------------------------------------------
# 5. fibers of the underlying map


def criterion_5():
    for n, m in product(range(5), repeat=2):
        sizes = Counter(cyclic.underlying(f) for f in cyclic.iter_hom(n, m))
        for u, k in sizes.items():
            want = n + 1 if len(set(u)) == 1 else 1
            if k != want or len(cyclic.fiber_over_underlying(u, m)) != want:
                return False, f"fiber over {u} in ({n},{m}) has {k} elements, expected {want}"
    return True, "fiber sizes n+1 over constant maps and 1 otherwise, n,m <= 4"


# ---------------------------------------------------------------------------
# 6. crossed simplicial groups


def criterion_6():
    lam = crossed.verify_csg_axioms(crossed.lambda_oracle(), 4)
    sym = crossed.verify_csg_axioms(crossed.sym_oracle(), 3)
    G = crossed.build_G_star(crossed.lambda_oracle(), 4)
    nd = ps.nondegenerate_counts(G)
    chi = ps.euler_characteristic(G)
    ok = lam.passed and sym.passed and G.card == [n + 1 for n in range(5)] and sum(nd) == 2 and chi == 0
    return ok, f"Lambda axioms N=4 {lam.passed}, Delta-Sym axioms N=3 {sym.passed}, G_* levels {G.card}, nondegenerate {nd}, chi {chi}"


# ---------------------------------------------------------------------------
# 7. realization shadows


def _dim(Y) -> int:
    return max(i for i, c in enumerate(ps.nondegenerate_counts(Y, check_top=False)) if c)


def criterion_7():
    L1 = ps.underlying_simplicial(ps.representable_cyclic(1, 3))
    counts = ps.nondegenerate_counts(L1)[:3]
    chis = [ps.euler_characteristic(ps.underlying_simplicial(ps.representable_cyclic(n, n + 2))) for n in range(4)]
    Ys = {
        "Delta[0]": ps.representable_simplicial(0, 0),
        "Delta[1]": ps.representable_simplicial(1, 1),
        "boundary(2)": ps.boundary_faces(2, 2, "simplicial").source,
        "horn(2,0)": ps.simplicial_horn(2, 0, 2).source,
        "horn(3,1)": ps.simplicial_horn(3, 1, 3).source,
    }
    kchis = {k: ps.euler_characteristic(ps.underlying_simplicial(ps.kan_extend(Y, _dim(Y) + 2))) for k, Y in Ys.items()}
    isos = [ps.kan_extend_representable_comparison(n, n + 1).is_iso for n in range(4)]
    ok = counts == [2, 4, 2] and not any(chis) and not any(kchis.values()) and all(isos)
    return ok, f"Lambda[1] cells {counts}, chi(Lambda[n]) {chis}, chi of extensions {list(kchis.values())}, extension of Delta[n] iso {isos}"


# ---------------------------------------------------------------------------
# 8. generalized Reedy structure


def reedy_corpus():
    N = 2
    Z2, Z3 = ps.cyclic_group_table(2), ps.cyclic_group_table(3)
    objs = {
        "point": ps.point(N),
        "constant2": ps.constant(2, N),
        "Lambda0": ps.representable_cyclic(0, N),
        "Lambda1": ps.representable_cyclic(1, N),
        "bar_Z2": ps.cyclic_nerve(Z2, N),
        "bar_Z3": ps.cyclic_nerve(Z3, N),
        "boundary1": ps.boundary_faces(1, N).source,
        "extension(horn(2,0))": ps.kan_extend(ps.simplicial_horn(2, 0, 2).source, N),
    }
    maps = [ps.boundary_faces(1, N), ps.cyclic_horn(2, 0, N), ps.cyclic_horn(1, 1, N),
            ps.terminal_map(objs["bar_Z2"]), ps.yoneda_map(objs["bar_Z3"], 1, 4)]
    return objs, maps


def criterion_8():
    rep = reedy.verify_generalized_reedy(3)
    if not rep.passed:
        return False, f"Reedy axioms fail: {rep.to_json()}"
    objs, maps = reedy_corpus()
    for name, X in objs.items():
        M0, M1 = reedy.matching(X, 0), reedy.matching(X, 1)
        if M0.gset.card != 1:
            return False, f"matching({name}, 0) has {M0.gset.card} elements"
        if sorted(M1.families) != list(product(range(X.card[0]), repeat=2)) or M1.gset.card != X.card[0] ** 2:
            return False, f"matching({name}, 1) is not X_0 x X_0"
    rel = 0
    for f in maps:
        for n in range(3):
            for E in (reedy.relative_latching(f, n), reedy.relative_matching(f, n)):
                rel += 1
                if E.source.problems() or E.target.problems() or not E.equivariant:
                    return False, f"relative map at n={n} not equivariant"
    return True, f"four axioms at degree 3, matching checks on {len(objs)} cyclic sets, {rel} relative maps equivariant"


# ---------------------------------------------------------------------------
# 9. Segal and 2-Segal


def criterion_9():
    cat = [len(segal.enumerate_triangulations(n)) for n in range(2, 10)]
    if cat != [segal.catalan(n - 1) for n in range(2, 10)] or cat[1] != 2:
        return False, f"triangulation counts {cat}"
    nerves = {"Z/2": ps.nerve(ps.cyclic_group_table(2), 4), "poset(3)": ps.poset_nerve(3, N=4)}
    for name, X in nerves.items():
        if not all(segal.segal_check(X, n).ok for n in range(1, 5)):
            return False, f"nerve of {name} fails the Segal check"
        if not segal.two_segal_report(X, 4).ok:
            return False, f"nerve of {name} fails the 2-Segal check"
    X = ps.nerve(ps.cyclic_group_table(2), 4)
    witnesses = []
    for _ in range(2):
        bad, _ = ps.delete_element(X, 2, 3)
        witnesses.append([v.to_json() for v in segal.segal_report(bad, 4).verdicts if not v.ok])
    reproducible = witnesses[0] == witnesses[1] and bool(witnesses[0])
    first = witnesses[0][0] if witnesses[0] else None
    return reproducible, f"Catalan counts {cat}; two nerves Segal and 2-Segal for n <= 4; doctored nerve fails with {first}"


# ---------------------------------------------------------------------------
# 10. lifting


def brute_rlp(p, i) -> tuple[bool, int]:
    """Independent oracle: all squares and all diagonals, no pruning by p."""
    diagonals = list(ps.iter_maps(i.target, p.source))
    squares = 0
    for bottom in ps.iter_maps(i.target, p.target):
        for top in ps.iter_maps(i.source, p.source):
            sq = lifting.LiftingProblem(i, p, top, bottom)
            if not sq.commutes():
                continue
            squares += 1
            if not any(sq.is_lift(h) for h in diagonals):
                return False, squares
    return True, squares


def lifting_corpus(seed: int = 20240613, size: int = 20):
    N = 2
    pool = {
        "point": ps.point(N),
        "constant2": ps.constant(2, N),
        "Lambda0": ps.representable_cyclic(0, N),
        "boundary1": ps.boundary_faces(1, N).source,
        "bar_Z2": ps.cyclic_nerve(ps.cyclic_group_table(2), N),
    }
    gens = [("boundary(0)", ps.boundary_faces(0, N)), ("boundary(1)", ps.boundary_faces(1, N)),
            ("horn(1,0)", ps.cyclic_horn(1, 0, N)), ("horn(1,1)", ps.cyclic_horn(1, 1, N)),
            ("horn(2,1)", ps.cyclic_horn(2, 1, N))]
    rng = random.Random(seed)
    names = sorted(pool)
    out = []
    while len(out) < size:
        x, y, z = (rng.choice(names) for _ in range(3))
        m1 = ps.enumerate_maps(pool[x], pool[y])
        m2 = ps.enumerate_maps(pool[y], pool[z])
        autos = [a for a in ps.enumerate_maps(pool[x], pool[x]) if a.is_iso]
        if not m1 or not m2:
            continue
        label, i = rng.choice(gens)
        out.append((f"{x}->{y}->{z} vs {label}", i, rng.choice(m1), rng.choice(m2), rng.choice(autos)))
    return out


def criterion_10():
    verified = closure_cases = 0
    for label, i, p1, p2, alpha in lifting_corpus():
        comp = ps.compose_maps(p2, p1)
        verdicts = {}
        for key, p in (("p1", p1), ("p2", p2), ("p2p1", comp), ("p1alpha", ps.compose_maps(p1, alpha)),
                       ("id", ps.identity_map(p1.source))):
            v = lifting.has_rlp(p, i)
            holds, squares = brute_rlp(p, i)
            if v.holds != holds:
                return False, f"{label}: verdict for {key} disagrees with brute force"
            if v.holds and (v.lifts_checked != v.squares or v.squares != squares):
                return False, f"{label}: {key} lifts not all verified"
            if not v.holds:
                sq = v.witness
                if not sq.commutes() or any(sq.is_lift(h) for h in ps.iter_maps(i.target, p.source)):
                    return False, f"{label}: witness for {key} is not a genuine failure"
            verified += 1
            verdicts[key] = v.holds
        if verdicts["p1"] and verdicts["p2"]:
            closure_cases += 1
            if not verdicts["p2p1"]:
                return False, f"{label}: composite loses the lifting property"
        if not verdicts["id"] or verdicts["p1alpha"] != verdicts["p1"]:
            return False, f"{label}: isomorphism case fails"
    X = ps.cyclic_nerve(ps.cyclic_group_table(2), 3)
    acyc = lifting.is_acyclic_fibration_up_to(ps.identity_map(X), 2).holds
    return acyc, (f"{verified} verdicts witness-verified against brute force, {closure_cases} closure cases, "
                  f"identity is an acyclic fibration up to 2: {acyc}")


# ---------------------------------------------------------------------------

CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _run(k: int) -> bool:
    start = time.perf_counter()
    ok, detail = CRITERIA[k - 1]()
    elapsed = time.perf_counter() - start
    if elapsed >= LIMIT_SECONDS:
        ok, detail = False, f"{detail} (took {elapsed:.1f} s, over the limit)"
    _report(k, ok, f"{detail} [{elapsed:.1f} s]")
    return ok


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k):
    assert _run(k), RESULTS[k]


if __name__ == "__main__":
    results = [_run(k) for k in range(1, 11)]
    sys.exit(0 if all(results) else 1)
