"""Generalized Reedy structure on the cyclic category.

Latching and matching objects of a cyclic set ``X`` are taken over the
degree-raising and degree-lowering slices of ``<n>``.  Since ``X`` is
contravariant, the diagrams are transported along the self-duality
``dual``: a map ``u: <s> -> <n>`` contributes ``X(dual(u)): X_s -> X_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Callable

from . import cyclic, delta
from ._unionfind import UnionFind
from .cyclic import CyclicMap
from .delta import OrdinalMap
from .errors import TruncationExceeded
from .presheaf import (
    FinCyclicSet,
    PresheafMap,
    boundary_faces,
    cyclic_horn,
    evaluate,
)


class ReedyClass(str, Enum):
    PLUS = "Plus"
    MINUS = "Minus"
    ISO = "Iso"
    NEITHER = "Neither"


def classify(phi: CyclicMap) -> ReedyClass:
    f = cyclic.canonical_factor(phi).delta_part
    inj, surj = f.is_injective, f.is_surjective
    if inj and surj:
        return ReedyClass.ISO
    if inj:
        return ReedyClass.PLUS
    if surj:
        return ReedyClass.MINUS
    return ReedyClass.NEITHER


def is_plus(phi: CyclicMap) -> bool:
    return classify(phi) in (ReedyClass.PLUS, ReedyClass.ISO)


def is_minus(phi: CyclicMap) -> bool:
    return classify(phi) in (ReedyClass.MINUS, ReedyClass.ISO)


def is_invertible(phi: CyclicMap) -> bool:
    return phi.src == phi.tgt and cyclic.canonical_factor(phi).delta_part == delta.identity(phi.src)


def degree_only_plus(phi: CyclicMap) -> bool:
    """The naive reading: anything that does not lower the degree."""
    return phi.src <= phi.tgt


def degree_only_minus(phi: CyclicMap) -> bool:
    return phi.src >= phi.tgt


def epi_mono(f: OrdinalMap) -> tuple[OrdinalMap, OrdinalMap]:
    """``f = mono o epi`` through ``[#image - 1]``; returns ``(epi, mono)``."""
    values = sorted(set(f.images))
    rank = {v: i for i, v in enumerate(values)}
    k = len(values) - 1
    return OrdinalMap(f.src, k, tuple(rank[v] for v in f.images)), OrdinalMap(k, f.tgt, tuple(values))


def reedy_factor(phi: CyclicMap) -> tuple[CyclicMap, CyclicMap]:
    """``phi = plus o minus``; the rotation goes into the ``minus`` factor."""
    pair = cyclic.canonical_factor(phi)
    epi, mono = epi_mono(pair.delta_part)
    minus = cyclic.compose_cyclic(cyclic.iota(epi), cyclic.tau_power(phi.src, pair.rotation))
    return cyclic.iota(mono), minus


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class ReedyReport:
    max_degree: int
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, axiom: str, **witness) -> None:
        self.checks[axiom] = False
        if len(self.counterexamples) < 20:
            self.counterexamples.append({"axiom": axiom, **{k: _show(v) for k, v in witness.items()}})

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": dict(sorted(self.checks.items())),
            "counterexamples": self.counterexamples,
        }


def _show(x):
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    return x.to_json() if hasattr(x, "to_json") else x


def verify_generalized_reedy(N: int, plus: Callable[[CyclicMap], bool] = is_plus,
                             minus: Callable[[CyclicMap], bool] = is_minus) -> ReedyReport:
    """Check the four generalized Reedy axioms on all morphisms of degree <= N."""
    rep = ReedyReport(N)
    names = ["degrees", "plus_minus_is_iso", "plus_closed", "minus_closed", "factorization", "minus_isotropy"]
    for name in names:
        rep.checks[name] = True
    homs = {(a, b): cyclic.enumerate_hom(a, b) for a in range(N + 1) for b in range(N + 1)}
    auts = {a: cyclic.automorphisms(a) for a in range(N + 1)}
    P = {key: [phi for phi in hom if plus(phi)] for key, hom in homs.items()}
    M = {key: [phi for phi in hom if minus(phi)] for key, hom in homs.items()}

    for (a, b), hom in homs.items():
        for phi in hom:
            inv = is_invertible(phi)
            p, m = plus(phi), minus(phi)
            if (inv and a != b) or (p and not inv and a >= b) or (m and not inv and a <= b):
                rep.fail("degrees", morphism=phi)
            if (p and m) != inv:
                rep.fail("plus_minus_is_iso", morphism=phi)

    for a, b, c in product(range(N + 1), repeat=3):
        for sub, name in ((P, "plus_closed"), (M, "minus_closed")):
            test = plus if sub is P else minus
            for f in sub[a, b]:
                for g in sub[b, c]:
                    gf = cyclic.compose_cyclic(g, f)
                    if not test(gf):
                        rep.fail(name, first=f, second=g)

    for a, b in product(range(N + 1), repeat=2):
        facts: dict[CyclicMap, list[tuple[CyclicMap, CyclicMap]]] = {phi: [] for phi in homs[a, b]}
        for k in range(N + 1):
            for q in M[a, k]:
                for p in P[k, b]:
                    facts[cyclic.compose_cyclic(p, q)].append((p, q))
        for phi, fs in facts.items():
            if not fs:
                rep.fail("factorization", morphism=phi, reason="none")
                continue
            p0, q0 = fs[0]
            for p, q in fs[1:]:
                if p.src != p0.src:
                    rep.fail("factorization", morphism=phi, reason="middle degrees differ")
                    continue
                thetas = [
                    th for th in auts[p0.src]
                    if cyclic.compose_cyclic(th, q0) == q and cyclic.compose_cyclic(p, th) == p0
                ]
                if len(thetas) != 1:
                    rep.fail("factorization", morphism=phi, reason=f"{len(thetas)} comparison isomorphisms")

    for (a, b), fs in M.items():
        for f in fs:
            for th in auts[a]:
                if th != cyclic.identity(a) and cyclic.compose_cyclic(f, th) == f:
                    rep.fail("minus_isotropy", morphism=f, theta=th)
    return rep


# ---------------------------------------------------------------------------
# equivariant sets


@dataclass
class GSet:
    """A finite set with a cyclic group action, given by its generator."""

    card: int
    action: tuple[int, ...]
    order: int
    labels: list | None = None

    def problems(self) -> list[str]:
        out = []
        if sorted(self.action) != list(range(self.card)):
            out.append("generator is not a permutation")
            return out
        power = tuple(range(self.card))
        for _ in range(self.order):
            power = tuple(self.action[v] for v in power)
        if power != tuple(range(self.card)):
            out.append(f"generator does not have order dividing {self.order}")
        return out

    def to_json(self) -> dict:
        return {"card": self.card, "action": list(self.action)}


def level_gset(X: FinCyclicSet, n: int) -> GSet:
    return GSet(X.card[n], X.t[n], n + 1)


@dataclass
class EquivariantMap:
    source: GSet
    target: GSet
    table: tuple[int, ...]

    @property
    def equivariant(self) -> bool:
        return all(self.table[self.source.action[x]] == self.target.action[self.table[x]] for x in range(self.source.card))

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.card

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(), "map": list(self.table)}


def _check_level(X: FinCyclicSet, n: int) -> None:
    if n > X.N or n < 0:
        raise TruncationExceeded(f"level {n} outside truncation {X.N}")


def _dual_tables(X: FinCyclicSet, maps: list[CyclicMap]) -> list[tuple[int, ...]]:
    return [evaluate(X, cyclic.dual(u)) for u in maps]


# ---------------------------------------------------------------------------
# latching


@dataclass
class Latching:
    gset: GSet
    comparison: EquivariantMap
    objects: list[CyclicMap]
    reps: list[tuple[int, int]]  # (object index, element of X_s)
    classes: dict[tuple[int, int], int]


def latching_diagram(n: int):
    objs = [u for s in range(n) for u in cyclic.enumerate_hom(s, n) if is_plus(u)]
    arrows = []
    for a, u in enumerate(objs):
        for b, v in enumerate(objs):
            for w in cyclic.enumerate_hom(u.src, v.src):
                if is_plus(w) and cyclic.compose_cyclic(v, w) == u:
                    arrows.append((a, b, w))
    return objs, arrows


def latching(X: FinCyclicSet, n: int) -> Latching:
    """``L_n(X)`` with its rotation action and comparison map to ``X_n``."""
    _check_level(X, n)
    objs, arrows = latching_diagram(n)
    pairs = [(o, x) for o, u in enumerate(objs) for x in range(X.card[u.src])]
    where = {p: i for i, p in enumerate(pairs)}
    uf = UnionFind(len(pairs))
    for a, b, w in arrows:
        tab = evaluate(X, cyclic.dual(w))  # X_{s} -> X_{s'}
        for x in range(X.card[objs[a].src]):
            uf.union(where[a, x], where[b, tab[x]])
    which, roots = uf.classes()
    reps = [pairs[r] for r in roots]
    classes = {p: which[i] for p, i in where.items()}
    obj_index = {u: i for i, u in enumerate(objs)}
    rot = cyclic.dual(cyclic.tau(n))
    action = tuple(classes[obj_index[cyclic.compose_cyclic(rot, objs[o])], x] for o, x in reps)
    gs = GSet(len(reps), action, n + 1, reps)
    duals = _dual_tables(X, objs)
    comp = tuple(duals[o][x] for o, x in reps)
    return Latching(gs, EquivariantMap(gs, level_gset(X, n), comp), objs, reps, classes)


# ---------------------------------------------------------------------------
# matching


@dataclass
class Matching:
    gset: GSet
    comparison: EquivariantMap
    objects: list[CyclicMap]
    families: list[tuple[int, ...]]


def matching_diagram(n: int):
    objs = [u for m in range(n) for u in cyclic.enumerate_hom(n, m) if is_minus(u)]
    arrows = []
    for a, u in enumerate(objs):
        for b, v in enumerate(objs):
            for w in cyclic.enumerate_hom(u.tgt, v.tgt):
                if is_minus(w) and cyclic.compose_cyclic(w, u) == v:
                    arrows.append((a, b, w))
    return objs, arrows


def _families(X: FinCyclicSet, objs, arrows) -> list[tuple[int, ...]]:
    out_edges: dict[int, list[tuple[int, tuple]]] = {a: [] for a in range(len(objs))}
    for a, b, w in arrows:
        out_edges[a].append((b, evaluate(X, cyclic.dual(w))))
    order = sorted(range(len(objs)), key=lambda o: (-objs[o].tgt, o))
    assign: dict[int, int] = {}
    found = []

    def propagate(o, v, trail) -> bool:
        stack = [(o, v)]
        while stack:
            u, val = stack.pop()
            cur = assign.get(u)
            if cur is not None:
                if cur != val:
                    return False
                continue
            assign[u] = val
            trail.append(u)
            for b, tab in out_edges[u]:
                stack.append((b, tab[val]))
        return True

    def rec(pos):
        while pos < len(order) and order[pos] in assign:
            pos += 1
        if pos == len(order):
            found.append(tuple(assign[o] for o in range(len(objs))))
            return
        o = order[pos]
        for v in range(X.card[objs[o].tgt]):
            trail = []
            if propagate(o, v, trail):
                rec(pos + 1)
            for u in trail:
                del assign[u]

    rec(0)
    return sorted(found)


def matching(X: FinCyclicSet, n: int) -> Matching:
    """``M_n(X)`` as compatible families, with rotation action and comparison ``X_n -> M_n(X)``."""
    _check_level(X, n)
    objs, arrows = matching_diagram(n)
    fams = _families(X, objs, arrows)
    index = {f: i for i, f in enumerate(fams)}
    obj_index = {u: i for i, u in enumerate(objs)}
    rot = cyclic.dual(cyclic.tau(n))
    # (g . x)_u = x_{u o rot}
    perm = [obj_index[cyclic.compose_cyclic(u, rot)] for u in objs]
    action = tuple(index[tuple(f[perm[o]] for o in range(len(objs)))] for f in fams)
    gs = GSet(len(fams), action, n + 1, fams)
    duals = _dual_tables(X, objs)
    comp = tuple(index[tuple(duals[o][x] for o in range(len(objs)))] for x in range(X.card[n]))
    return Matching(gs, EquivariantMap(level_gset(X, n), gs, comp), objs, fams)


# ---------------------------------------------------------------------------
# relative maps


def relative_latching(f: PresheafMap, n: int) -> EquivariantMap:
    """``X_n u_{L_n X} L_n Y -> Y_n``."""
    X, Y = f.source, f.target
    LX, LY = latching(X, n), latching(Y, n)
    fn = f.levels[n]
    # L(f): [u, x] -> [u, f(x)]
    Lf = [LY.classes[o, f.levels[LX.objects[o].src][x]] for o, x in LX.reps]
    nx = X.card[n]
    uf = UnionFind(nx + LY.gset.card)
    for c, (o, x) in enumerate(LX.reps):
        uf.union(LX.comparison.table[c], nx + Lf[c])
    which, roots = uf.classes()
    act_x, act_l = X.t[n], LY.gset.action

    def move(r):
        return which[act_x[r]] if r < nx else which[nx + act_l[r - nx]]

    def value(r):
        return fn[r] if r < nx else LY.comparison.table[r - nx]

    src = GSet(len(roots), tuple(move(r) for r in roots), n + 1, roots)
    return EquivariantMap(src, level_gset(Y, n), tuple(value(r) for r in roots))


def relative_matching(f: PresheafMap, n: int) -> EquivariantMap:
    """``X_n -> M_n X x_{M_n Y} Y_n``."""
    X, Y = f.source, f.target
    MX, MY = matching(X, n), matching(Y, n)
    yindex = {fam: i for i, fam in enumerate(MY.families)}
    Mf = [yindex[tuple(f.levels[MX.objects[o].tgt][v] for o, v in enumerate(fam))] for fam in MX.families]
    pairs = [(a, y) for a in range(MX.gset.card) for y in range(Y.card[n]) if Mf[a] == MY.comparison.table[y]]
    index = {p: i for i, p in enumerate(pairs)}
    action = tuple(index[MX.gset.action[a], Y.t[n][y]] for a, y in pairs)
    tgt = GSet(len(pairs), action, n + 1, pairs)
    table = tuple(index[MX.comparison.table[x], f.levels[n][x]] for x in range(X.card[n]))
    return EquivariantMap(level_gset(X, n), tgt, table)


# ---------------------------------------------------------------------------
# generators of the model structure on cyclic sets


def cset_generators(n: int, N: int) -> PresheafMap:
    """Boundary inclusion into ``Lambda[n]``."""
    return boundary_faces(n, N)


def cset_acyclic_generators(n: int, k: int, N: int) -> PresheafMap:
    """Horn inclusion into ``Lambda[n]``."""
    return cyclic_horn(n, k, N)


__all__ = [
    "EquivariantMap",
    "GSet",
    "Latching",
    "Matching",
    "ReedyClass",
    "ReedyReport",
    "classify",
    "cset_acyclic_generators",
    "cset_generators",
    "degree_only_minus",
    "degree_only_plus",
    "epi_mono",
    "is_invertible",
    "is_minus",
    "is_plus",
    "latching",
    "latching_diagram",
    "level_gset",
    "matching",
    "matching_diagram",
    "reedy_factor",
    "relative_latching",
    "relative_matching",
    "verify_generalized_reedy",
]
