"""Standard finite presheaves and the finite colimits used to build them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from .. import cyclic, delta
from .._unionfind import UnionFind
from ..cyclic import CyclicMap
from ..delta import OrdinalMap
from ..errors import (
    AxiomFailure,
    DegreeMismatch,
    IndexOutOfRange,
    NoIdentity,
    NotAssociative,
    ResourceLimit,
    TruncationExceeded,
    TruncationTooLow,
    check_limit,
)
from .core import (
    FinCyclicSet,
    FinSimplicialSet,
    PresheafMap,
    build_from_action,
    compose_tables,
    evaluate,
)


# ---------------------------------------------------------------------------
# the two indexing categories, behind one interface


@dataclass(frozen=True)
class _Flavor:
    cyclic: bool

    def hom(self, k: int, n: int, limit=None) -> list:
        if self.cyclic:
            return cyclic.enumerate_hom(k, n, limit)
        return delta.enumerate_monotone(k, n, limit)

    def compose(self, g, f):
        return cyclic.compose_cyclic(g, f) if self.cyclic else delta.compose_ordinal(g, f)

    def face(self, n: int, i: int):
        f = delta.face(n, i)
        return cyclic.iota(f) if self.cyclic else f

    def degeneracy(self, n: int, i: int):
        f = delta.degeneracy(n, i)
        return cyclic.iota(f) if self.cyclic else f

    def identity(self, n: int):
        return cyclic.identity(n) if self.cyclic else delta.identity(n)

    def lift(self, f: OrdinalMap):
        return cyclic.iota(f) if self.cyclic else f


CYCLIC = _Flavor(True)
SIMPLICIAL = _Flavor(False)


def _flavor(flag) -> _Flavor:
    if flag in (True, "cyclic"):
        return CYCLIC
    if flag in (False, "simplicial"):
        return SIMPLICIAL
    raise ValueError(f"unknown flavor {flag!r}")


def _precompose_set(levels: list[list], N: int, fl: _Flavor) -> FinSimplicialSet:
    """Presheaf whose level ``k`` is a list of morphisms out of ``<k>``, acted on by precomposition."""
    t_fn = (lambda n, x: fl.compose(x, cyclic.tau(n))) if fl.cyclic else None
    return build_from_action(
        levels,
        N,
        lambda n, i, x: fl.compose(x, fl.face(n, i)),
        lambda n, i, x: fl.compose(x, fl.degeneracy(n, i)),
        t_fn,
    )


def representable_cyclic(n: int, N: int, limit: int | None = None) -> FinCyclicSet:
    """``Lambda[n]`` truncated at ``N``; level ``k`` lists ``Hom(<k>, <n>)``."""
    levels = [cyclic.enumerate_hom(k, n, limit) for k in range(N + 1)]
    return _precompose_set(levels, N, CYCLIC)


def representable_simplicial(n: int, N: int, limit: int | None = None) -> FinSimplicialSet:
    """``Delta[n]`` truncated at ``N``; level ``k`` lists ``Mon([k], [n])``."""
    levels = [delta.enumerate_monotone(k, n, limit) for k in range(N + 1)]
    return _precompose_set(levels, N, SIMPLICIAL)


def element_index(X: FinSimplicialSet, level: int, label) -> int:
    """Position of a labelled element (for representables and nerves)."""
    if X.labels is None:
        raise ValueError("presheaf carries no labels")
    return X.labels[level].index(label)


def yoneda_map(X: FinSimplicialSet, n: int, x: int, R: FinSimplicialSet | None = None) -> PresheafMap:
    """The map from the representable on ``n`` classifying ``x in X_n``."""
    if n > X.N:
        raise TruncationExceeded(f"level {n} above truncation {X.N}")
    if R is None:
        R = representable_cyclic(n, X.N) if X.cyclic else representable_simplicial(n, X.N)
    levels = []
    for k in range(X.N + 1):
        levels.append(tuple(evaluate(X, phi)[x] for phi in R.labels[k]))
    return PresheafMap(R, X, levels)


# ---------------------------------------------------------------------------
# subobjects


def generated_subobject(X: FinSimplicialSet, seeds: Iterable[tuple[int, int]]):
    """Smallest sub-presheaf containing ``seeds``; returns ``(sub, inclusion)``."""
    keep = [set() for _ in range(X.N + 1)]
    edges: dict[int, list[tuple[int, tuple]]] = {n: [] for n in range(X.N + 1)}
    for _, a, b, tab in X.operators():
        edges[a].append((b, tab))
    stack = []
    for lvl, x in seeds:
        if not 0 <= lvl <= X.N or not 0 <= x < X.card[lvl]:
            raise IndexOutOfRange(f"seed ({lvl}, {x}) out of range", index=x)
        stack.append((lvl, x))
    while stack:
        lvl, x = stack.pop()
        if x in keep[lvl]:
            continue
        keep[lvl].add(x)
        for b, tab in edges[lvl]:
            if tab[x] not in keep[b]:
                stack.append((b, tab[x]))
    return restrict(X, [sorted(k) for k in keep])


def restrict(X: FinSimplicialSet, members: Sequence[Sequence[int]]):
    """Sub-presheaf on the given (operator-closed) element lists, with inclusion."""
    pos = [{x: k for k, x in enumerate(lvl)} for lvl in members]
    N = X.N

    def sub(tab, src, tgt):
        return tuple(pos[tgt][tab[x]] for x in members[src])

    card = [len(lvl) for lvl in members]
    d = [[sub(tab, n, n - 1) for tab in X.d[n]] for n in range(N + 1)]
    s = [[sub(tab, n, n + 1) for tab in X.s[n]] for n in range(N + 1)]
    labels = [[X.labels[n][x] for x in members[n]] for n in range(N + 1)] if X.labels else None
    if X.cyclic:
        S = FinCyclicSet(card, d, s, [sub(X.t[n], n, n) for n in range(N + 1)], labels)
    else:
        S = FinSimplicialSet(card, d, s, labels)
    return S, PresheafMap(S, X, [tuple(lvl) for lvl in members])


def delete_element(X: FinSimplicialSet, level: int, x: int):
    """Largest sub-presheaf avoiding ``x``: drop everything whose closure contains it."""
    if not 0 <= level <= X.N or not 0 <= x < X.card[level]:
        raise IndexOutOfRange(f"element ({level}, {x}) out of range", index=x)
    back: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for _, a, b, tab in X.operators():
        for y, v in enumerate(tab):
            back.setdefault((b, v), []).append((a, y))
    gone = {(level, x)}
    stack = [(level, x)]
    while stack:
        for u in back.get(stack.pop(), []):
            if u not in gone:
                gone.add(u)
                stack.append(u)
    keep = [[y for y in range(X.card[n]) if (n, y) not in gone] for n in range(X.N + 1)]
    return restrict(X, keep)


def image(f: PresheafMap):
    """Image of ``f`` as a subobject of its target."""
    return restrict(f.target, [sorted(set(tab)) for tab in f.levels])


def _face_seeds(n: int, R: FinSimplicialSet, fl: _Flavor, skip: int | None):
    if n - 1 > R.N:
        raise TruncationTooLow(f"truncation {R.N} too low for faces of level {n}")
    return [(n - 1, element_index(R, n - 1, fl.face(n, i))) for i in range(n + 1) if i != skip] if n else []


def boundary_faces(n: int, N: int, flavor="cyclic") -> PresheafMap:
    """Inclusion of the face-generated boundary into the representable on ``n``."""
    fl = _flavor(flavor)
    if n < 0:
        raise IndexOutOfRange("n must be non-negative", index=n)
    R = representable_cyclic(n, N) if fl.cyclic else representable_simplicial(n, N)
    return generated_subobject(R, _face_seeds(n, R, fl, None))[1]


def cyclic_horn(n: int, k: int, N: int, flavor="cyclic") -> PresheafMap:
    """Inclusion of the subobject generated by all faces except the ``k``-th."""
    fl = _flavor(flavor)
    if n < 1 or not 0 <= k <= n:
        raise IndexOutOfRange(f"horn ({n}, {k}) needs n >= 1 and 0 <= k <= n", index=k)
    R = representable_cyclic(n, N) if fl.cyclic else representable_simplicial(n, N)
    return generated_subobject(R, _face_seeds(n, R, fl, k))[1]


def simplicial_horn(m: int, k: int, M: int) -> PresheafMap:
    return cyclic_horn(m, k, M, flavor="simplicial")


# ---------------------------------------------------------------------------
# colimits


@dataclass
class Colimit:
    obj: FinSimplicialSet
    reps: list[list[tuple[int, object]]]  # per level: (diagram object, morphism) representatives
    members: list[list[int]]  # per level: class index of each raw pair
    raw: list[dict]  # per level: raw pair -> position


def colimit_of_representables(degrees: Sequence[int], arrows: Sequence[tuple[int, int, object]], N: int,
                              flavor="cyclic", limit: int | None = None) -> Colimit:
    """Colimit of a diagram of representables, truncated at ``N``.

    ``degrees[o]`` is the representable at diagram object ``o``; an arrow
    ``(a, b, w)`` with ``w: <degrees[a]> -> <degrees[b]>`` identifies
    ``(a, psi)`` with ``(b, w o psi)``.
    """
    fl = _flavor(flavor)
    homs = {}
    for s in set(degrees):
        for k in range(N + 1):
            homs[k, s] = fl.hom(k, s)
    raw_levels = []
    classes = []
    reps = []
    for k in range(N + 1):
        pairs = [(o, psi) for o, s in enumerate(degrees) for psi in homs[k, s]]
        check_limit(len(pairs), limit, f"colimit level {k}")
        where = {p: idx for idx, p in enumerate(pairs)}
        uf = UnionFind(len(pairs))
        for a, b, w in arrows:
            for psi in homs[k, degrees[a]]:
                uf.union(where[a, psi], where[b, fl.compose(w, psi)])
        which, roots = uf.classes()
        raw_levels.append(where)
        classes.append(which)
        reps.append([pairs[r] for r in roots])

    def act(n, rep, g):
        o, psi = rep
        return classes[g[0]][raw_levels[g[0]][o, fl.compose(psi, g[1])]]

    d = [[tuple(act(n, r, (n - 1, fl.face(n, i))) for r in reps[n]) for i in range(n + 1)] if n else []
         for n in range(N + 1)]
    s = [[tuple(act(n, r, (n + 1, fl.degeneracy(n, i))) for r in reps[n]) for i in range(n + 1)] if n < N else []
         for n in range(N + 1)]
    card = [len(r) for r in reps]
    if fl.cyclic:
        t = [tuple(act(n, r, (n, cyclic.tau(n))) for r in reps[n]) for n in range(N + 1)]
        X = FinCyclicSet(card, d, s, t, [list(r) for r in reps])
    else:
        X = FinSimplicialSet(card, d, s, [list(r) for r in reps])
    return Colimit(X, reps, classes, raw_levels)


def colimit_comparison(C: Colimit, target: FinSimplicialSet, cocone: Callable[[int, object], object]) -> PresheafMap:
    """Map out of a colimit of representables given on raw pairs.

    ``cocone(o, psi)`` returns a label of ``target``; consistency on every
    class is checked.
    """
    index = [{lab: i for i, lab in enumerate(lvl)} for lvl in target.labels]
    levels = []
    for k in range(C.obj.N + 1):
        out = [None] * C.obj.card[k]
        for (o, psi), idx in C.raw[k].items():
            v = index[k][cocone(o, psi)]
            c = C.members[k][idx]
            if out[c] is None:
                out[c] = v
            elif out[c] != v:
                raise AxiomFailure(f"cocone not constant on a class at level {k}")
        levels.append(tuple(out))
    return PresheafMap(C.obj, target, levels)


@dataclass
class Pushout:
    obj: FinSimplicialSet
    left: PresheafMap  # A -> P
    right: PresheafMap  # B -> P


def pushout(f: PresheafMap, g: PresheafMap) -> Pushout:
    """Pushout of ``A <-f- C -g-> B``, computed levelwise in sets."""
    if f.source is not g.source and f.source.to_json() != g.source.to_json():
        raise DegreeMismatch("pushout legs must share their source")
    A, B, Cs = f.target, g.target, f.source
    N = A.N
    which_lv, reps_lv = [], []
    for k in range(N + 1):
        na = A.card[k]
        uf = UnionFind(na + B.card[k])
        for c in range(Cs.card[k]):
            uf.union(f.levels[k][c], na + g.levels[k][c])
        which, roots = uf.classes()
        which_lv.append(which)
        reps_lv.append(roots)

    def induced(tab_a, tab_b, src, tgt):
        na_src, na_tgt = A.card[src], A.card[tgt]
        out = []
        for r in reps_lv[src]:
            v = tab_a[r] if r < na_src else na_tgt + tab_b[r - na_src]
            out.append(which_lv[tgt][v])
        return tuple(out)

    d = [[induced(A.d[n][i], B.d[n][i], n, n - 1) for i in range(len(A.d[n]))] for n in range(N + 1)]
    s = [[induced(A.s[n][i], B.s[n][i], n, n + 1) for i in range(len(A.s[n]))] for n in range(N + 1)]
    card = [len(r) for r in reps_lv]
    if A.cyclic:
        P = FinCyclicSet(card, d, s, [induced(A.t[n], B.t[n], n, n) for n in range(N + 1)])
    else:
        P = FinSimplicialSet(card, d, s)
    left = PresheafMap(A, P, [tuple(which_lv[k][a] for a in range(A.card[k])) for k in range(N + 1)])
    right = PresheafMap(B, P, [tuple(which_lv[k][A.card[k] + b] for b in range(B.card[k])) for k in range(N + 1)])
    return Pushout(P, left, right)


def pushout_induced(po: Pushout, a: PresheafMap, b: PresheafMap) -> PresheafMap:
    """The map ``P -> Z`` induced by ``a: A -> Z`` and ``b: B -> Z``."""
    Z = a.target
    levels = []
    for k in range(po.obj.N + 1):
        out = [None] * po.obj.card[k]
        for x, c in enumerate(po.left.levels[k]):
            out[c] = a.levels[k][x]
        for x, c in enumerate(po.right.levels[k]):
            v = b.levels[k][x]
            if out[c] is not None and out[c] != v:
                raise AxiomFailure("maps do not agree on the glued part")
            out[c] = v
        levels.append(tuple(out))
    return PresheafMap(po.obj, Z, levels)


# ---------------------------------------------------------------------------
# spines, boundaries via latching, triangulations


def spine(n: int, N: int) -> tuple[FinCyclicSet, PresheafMap]:
    """``Gamma(n)``: ``n`` copies of ``Lambda[1]`` glued end to end, with its map to ``Lambda[n]``."""
    if n < 1:
        raise IndexOutOfRange("spine needs n >= 1", index=n)
    L0 = representable_cyclic(0, N)
    L1 = representable_cyclic(1, N)
    Ln = representable_cyclic(n, N)
    v0 = element_index(L1, 0, cyclic.face(1, 1))  # vertex 0 of an edge
    v1 = element_index(L1, 0, cyclic.face(1, 0))  # vertex 1

    def edge_map(i):
        # edge i of the chain goes to the image (i-1, i)
        e = element_index(Ln, 1, cyclic.iota(OrdinalMap(1, n, (i - 1, i))))
        return yoneda_map(Ln, 1, e, L1)

    G = L1
    to_n = edge_map(1)
    last = v1
    for i in range(2, n + 1):
        glue_left = yoneda_map(G, 0, last, L0)
        glue_right = yoneda_map(L1, 0, v0, L0)
        po = pushout(glue_left, glue_right)
        to_n = pushout_induced(po, to_n, edge_map(i))
        last = po.right.levels[0][v1]
        G = po.obj
    return G, to_n


def boundary_latch(n: int, N: int) -> tuple[FinCyclicSet, PresheafMap]:
    """Colimit of ``Lambda[s]`` over non-invertible degree-raising maps into ``<n>``.

    Returns the colimit and its comparison map to ``Lambda[n]``, which need
    not be injective.
    """
    objs = [u for s in range(n) for u in cyclic.enumerate_hom(s, n) if _is_plus(u)]
    arrows = []
    for a, u in enumerate(objs):
        for b, v in enumerate(objs):
            for w in cyclic.enumerate_hom(u.src, v.src):
                if _is_plus(w) and cyclic.compose_cyclic(v, w) == u:
                    arrows.append((a, b, w))
    C = colimit_of_representables([u.src for u in objs], arrows, N)
    Ln = representable_cyclic(n, N)
    comp = colimit_comparison(C, Ln, lambda o, psi: cyclic.compose_cyclic(objs[o], psi))
    return C.obj, comp


def _is_plus(u: CyclicMap) -> bool:
    return cyclic.canonical_factor(u).delta_part.is_injective


def triangulation_object(T, flavor="simplicial", N: int = 2):
    """Subobject of the representable on ``T.n`` generated by the triangles of ``T``."""
    from ..segal import as_triangulation

    T = as_triangulation(T)
    fl = _flavor(flavor)
    if N < 2:
        raise TruncationTooLow("triangles live in level 2")
    R = representable_cyclic(T.n, N) if fl.cyclic else representable_simplicial(T.n, N)
    seeds = [(2, element_index(R, 2, fl.lift(OrdinalMap(2, T.n, tri)))) for tri in T.triangles]
    return generated_subobject(R, seeds)


# ---------------------------------------------------------------------------
# realization bookkeeping


def degenerate_elements(X: FinSimplicialSet) -> list[set[int]]:
    out = [set() for _ in range(X.N + 1)]
    for n in range(X.N):
        for tab in X.s[n]:
            out[n + 1].update(tab)
    return out


def nondegenerate_counts(X: FinSimplicialSet, check_top: bool = True) -> list[int]:
    """Nondegenerate elements per level.

    With ``check_top`` the top level must be entirely degenerate, otherwise the
    truncation may hide cells and :class:`TruncationTooLow` is raised.
    """
    deg = degenerate_elements(X)
    counts = [X.card[n] - len(deg[n]) for n in range(X.N + 1)]
    if check_top and counts[-1]:
        raise TruncationTooLow(f"level {X.N} still has {counts[-1]} nondegenerate elements")
    return counts


def euler_characteristic(X: FinSimplicialSet) -> int:
    return sum((-1) ** n * c for n, c in enumerate(nondegenerate_counts(X)))


# ---------------------------------------------------------------------------
# left Kan extension along the inclusion of the simplex category


def kan_extend(Y: FinSimplicialSet, N: int, limit: int | None = None) -> FinCyclicSet:
    """Cyclic set freely generated by ``Y``: colimit of ``Lambda[n]`` over the simplices of ``Y``."""
    return kan_extend_colimit(Y, N, limit).obj


def kan_extend_colimit(Y: FinSimplicialSet, N: int, limit: int | None = None) -> Colimit:
    if Y.cyclic:
        raise DegreeMismatch("kan_extend takes a simplicial set")
    objs = [(n, y) for n in range(Y.N + 1) for y in range(Y.card[n])]
    where = {o: i for i, o in enumerate(objs)}
    arrows = []
    for n in range(1, Y.N + 1):
        for i in range(n + 1):
            w = cyclic.face(n, i)
            for y in range(Y.card[n]):
                arrows.append((where[n - 1, Y.d[n][i][y]], where[n, y], w))
    for n in range(Y.N):
        for i in range(n + 1):
            w = cyclic.degeneracy(n, i)
            for y in range(Y.card[n]):
                arrows.append((where[n + 1, Y.s[n][i][y]], where[n, y], w))
    return colimit_of_representables([n for n, _ in objs], arrows, N, limit=limit)


def kan_extend_representable_comparison(n: int, N: int, YN: int | None = None) -> PresheafMap:
    """Canonical map from the Kan extension of ``Delta[n]`` to ``Lambda[n]``."""
    Y = representable_simplicial(n, n + 1 if YN is None else YN)
    C = kan_extend_colimit(Y, N)
    objs = [(k, y) for k in range(Y.N + 1) for y in range(Y.card[k])]
    target = representable_cyclic(n, N)
    return colimit_comparison(C, target, lambda o, psi: cyclic.compose_cyclic(cyclic.iota(Y.labels[objs[o][0]][objs[o][1]]), psi))


# ---------------------------------------------------------------------------
# nerves


def _find_identity(table) -> int:
    size = len(table)
    for e in range(size):
        if all(table[e][a] == a and table[a][e] == a for a in range(size)):
            return e
    raise NoIdentity("multiplication table has no two-sided identity")


def _check_assoc(table) -> None:
    size = len(table)
    for a, b, c in product(range(size), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")


def nerve(mult_table, N: int) -> FinSimplicialSet:
    """Nerve of a finite monoid; ``mult_table[a][b]`` is the product ``a b``."""
    size = len(mult_table)
    return category_nerve([0] * size, [0] * size, mult_table, N)


def poset_nerve(size: int, leq=None, N: int = 4) -> FinSimplicialSet:
    """Nerve of a finite poset (default: the chain ``0 < 1 < ... < size-1``)."""
    if leq is None:
        leq = lambda a, b: a <= b  # noqa: E731
    arrows = [(a, b) for a in range(size) for b in range(size) if leq(a, b)]
    where = {p: i for i, p in enumerate(arrows)}
    comp = [[where.get((a[0], b[1])) if a[1] == b[0] else None for b in arrows] for a in arrows]
    for i, a in enumerate(arrows):
        for j, b in enumerate(arrows):
            if a[1] == b[0] and comp[i][j] is None:
                raise NotAssociative("relation is not transitive")
    return category_nerve([a for a, _ in arrows], [b for _, b in arrows], comp, N)


def category_nerve(src: Sequence[int], tgt: Sequence[int], then, N: int,
                   limit: int | None = None) -> FinSimplicialSet:
    """Nerve of a finite category.

    Arrows are ``0 .. len(src)-1``; ``then[a][b]`` is "``a`` followed by ``b``"
    whenever ``tgt[a] == src[b]``.
    """
    arrows = range(len(src))
    objects = sorted(set(src) | set(tgt)) or []
    ident = {}
    for x in objects:
        cands = [e for e in arrows if src[e] == tgt[e] == x and all(
            (then[e][a] == a if src[a] == x else True) and (then[a][e] == a if tgt[a] == x else True) for a in arrows)]
        if not cands:
            raise NoIdentity(f"object {x} has no identity arrow")
        ident[x] = cands[0]
    for a, b, c in product(arrows, repeat=3):
        if tgt[a] == src[b] and tgt[b] == src[c]:
            if then[then[a][b]][c] != then[a][then[b][c]]:
                raise NotAssociative(f"({a};{b});{c} != {a};({b};{c})")
    levels: list[list] = [list(objects)]
    chains = [(a,) for a in arrows]
    for k in range(1, N + 1):
        check_limit(len(chains), limit, f"nerve level {k}")
        levels.append(sorted(chains))
        chains = [c + (b,) for c in chains for b in arrows if tgt[c[-1]] == src[b]]

    def vertex(n, x, i):
        if n == 0:
            return x
        return src[x[i]] if i < n else tgt[x[n - 1]]

    def d_fn(n, i, x):
        if n == 1:
            return tgt[x[0]] if i == 0 else src[x[0]]
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[: i - 1] + (then[x[i - 1]][x[i]],) + x[i + 1:]

    def s_fn(n, i, x):
        e = ident[vertex(n, x, i)]
        if n == 0:
            return (e,)
        return x[:i] + (e,) + x[i:]

    return build_from_action(levels, N, d_fn, s_fn)


def cyclic_nerve(group_table, N: int, limit: int | None = None) -> FinCyclicSet:
    """Cyclic bar construction; level ``k`` is all ``(k+1)``-tuples."""
    _check_assoc(group_table)
    e = _find_identity(group_table)
    size = len(group_table)
    mul = group_table
    levels = []
    for k in range(N + 1):
        check_limit(size ** (k + 1), limit, f"cyclic nerve level {k}")
        levels.append(list(product(range(size), repeat=k + 1)))

    def d_fn(n, i, x):
        if i < n:
            return x[:i] + (mul[x[i]][x[i + 1]],) + x[i + 2:]
        return (mul[x[n]][x[0]],) + x[1:n]

    def s_fn(n, i, x):
        return x[: i + 1] + (e,) + x[i + 1:]

    def t_fn(n, x):
        return (x[n],) + x[:n]

    return build_from_action(levels, N, d_fn, s_fn, t_fn)


def cyclic_group_table(order: int) -> list[list[int]]:
    return [[(a + b) % order for b in range(order)] for a in range(order)]


__all__ = [
    "CYCLIC",
    "SIMPLICIAL",
    "Colimit",
    "Pushout",
    "boundary_faces",
    "boundary_latch",
    "category_nerve",
    "colimit_comparison",
    "colimit_of_representables",
    "cyclic_group_table",
    "cyclic_horn",
    "cyclic_nerve",
    "degenerate_elements",
    "delete_element",
    "element_index",
    "euler_characteristic",
    "generated_subobject",
    "image",
    "kan_extend",
    "kan_extend_colimit",
    "kan_extend_representable_comparison",
    "nerve",
    "nondegenerate_counts",
    "poset_nerve",
    "pushout",
    "pushout_induced",
    "representable_cyclic",
    "representable_simplicial",
    "restrict",
    "simplicial_horn",
    "spine",
    "triangulation_object",
    "yoneda_map",
]
