"""Truncated, levelwise finite simplicial and cyclic sets.

Elements of level ``n`` are the integers ``0 .. card[n]-1``.  Operators are
dense lookup tables:

* ``d[n][i]`` is the face ``X_n -> X_{n-1}`` (empty list at ``n = 0``),
* ``s[n][i]`` is the degeneracy ``X_n -> X_{n+1}`` (empty list at ``n = N``),
* ``t[n]`` is the cyclic operator ``X_n -> X_n`` (cyclic sets only).

Tables are contravariant images of the category generators: ``d[n][i]`` is
``X(face(n, i))``, ``s[n][i]`` is ``X(degeneracy(n, i))`` and ``t[n]`` is
``X(tau(n))``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .. import cyclic, delta
from ..cyclic import CyclicMap
from ..delta import OrdinalMap
from ..errors import DegreeMismatch, InvalidPresheaf, TruncationExceeded

Table = tuple[int, ...]


def _tables(raw, count: int, name: str) -> list[list[Table]]:
    out = [[tuple(int(v) for v in tab) for tab in level] for level in raw]
    if len(out) > count:
        raise InvalidPresheaf(f"too many {name} levels")
    while len(out) < count:
        out.append([])
    return out


class FinSimplicialSet:
    """A simplicial set truncated at level ``N = len(card) - 1``."""

    kind = "simplicial-set"
    cyclic = False

    def __init__(self, card: Sequence[int], d, s, labels=None):
        self.card = [int(c) for c in card]
        N = len(self.card) - 1
        if N < 0:
            raise InvalidPresheaf("a presheaf needs at least level 0")
        self.d = _tables(d, N + 1, "face")
        self.s = _tables(s, N + 1, "degeneracy")
        self.labels = labels
        self._check_shape()

    @property
    def N(self) -> int:
        return len(self.card) - 1

    def _check_shape(self) -> None:
        N, c = self.N, self.card
        for n in range(N + 1):
            want_d = n + 1 if n >= 1 else 0
            want_s = n + 1 if n < N else 0
            if len(self.d[n]) != want_d:
                raise InvalidPresheaf(f"level {n} needs {want_d} face tables, got {len(self.d[n])}")
            if len(self.s[n]) != want_s:
                raise InvalidPresheaf(f"level {n} needs {want_s} degeneracy tables, got {len(self.s[n])}")
            for i, tab in enumerate(self.d[n]):
                _check_table(tab, c[n], c[n - 1], f"d[{n}][{i}]")
            for i, tab in enumerate(self.s[n]):
                _check_table(tab, c[n], c[n + 1], f"s[{n}][{i}]")

    def operators(self) -> Iterator[tuple[tuple, int, int, Table]]:
        """Yield ``(key, source level, target level, table)`` for every generator."""
        for n in range(self.N + 1):
            for i, tab in enumerate(self.d[n]):
                yield ("d", n, i), n, n - 1, tab
            for i, tab in enumerate(self.s[n]):
                yield ("s", n, i), n, n + 1, tab

    def validate(self) -> list[str]:
        return _simplicial_problems(self)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "truncation": self.N,
            "card": list(self.card),
            "d": [[list(t) for t in lvl] for lvl in self.d],
            "s": [[list(t) for t in lvl] for lvl in self.s],
        }

    def same_tables(self, other: "FinSimplicialSet") -> bool:
        return self.to_json() == other.to_json()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(card={self.card})"


class FinCyclicSet(FinSimplicialSet):
    """A cyclic set: simplicial tables plus cyclic operators ``t[n]``."""

    kind = "cyclic-set"
    cyclic = True

    def __init__(self, card: Sequence[int], d, s, t, labels=None):
        super().__init__(card, d, s, labels)
        self.t = [tuple(int(v) for v in tab) for tab in t]
        if len(self.t) != self.N + 1:
            raise InvalidPresheaf(f"need {self.N + 1} cyclic tables, got {len(self.t)}")
        for n, tab in enumerate(self.t):
            _check_table(tab, self.card[n], self.card[n], f"t[{n}]")

    def operators(self):
        yield from super().operators()
        for n, tab in enumerate(self.t):
            yield ("t", n, 0), n, n, tab

    def validate(self) -> list[str]:
        return _simplicial_problems(self) + _cyclic_problems(self)

    def to_json(self) -> dict:
        out = super().to_json()
        out["t"] = [list(t) for t in self.t]
        return out


def _check_table(tab: Table, size: int, tgt: int, name: str) -> None:
    if len(tab) != size:
        raise InvalidPresheaf(f"{name} has {len(tab)} entries, expected {size}")
    for x, v in enumerate(tab):
        if not 0 <= v < tgt:
            raise InvalidPresheaf(f"{name} sends {x} to {v}, outside level of size {tgt}")


def compose_tables(*tabs: Table) -> Table:
    """``compose_tables(a, b, c)`` is ``a o b o c`` (apply ``c`` first)."""
    out = tabs[-1]
    for tab in reversed(tabs[:-1]):
        out = tuple(tab[v] for v in out)
    return out


def identity_table(size: int) -> Table:
    return tuple(range(size))


def _simplicial_problems(X: FinSimplicialSet) -> list[str]:
    N, d, s, c = X.N, X.d, X.s, X.card
    bad: list[str] = []
    ct = compose_tables
    for n in range(2, N + 1):
        for j in range(1, n + 1):
            for i in range(j):
                if ct(d[n - 1][i], d[n][j]) != ct(d[n - 1][j - 1], d[n][i]):
                    bad.append(f"d_{i} d_{j} != d_{j - 1} d_{i} at n={n}")
    for n in range(N):
        # s_j: X_n -> X_{n+1}, followed by a face of level n+1
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = ct(d[n + 1][i], s[n][j])
                if i < j:
                    rhs = ct(s[n - 1][j - 1], d[n][i])
                elif i in (j, j + 1):
                    rhs = identity_table(c[n])
                else:
                    rhs = ct(s[n - 1][j], d[n][i - 1])
                if lhs != rhs:
                    bad.append(f"d_{i} s_{j} identity fails at n={n}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if ct(s[n + 1][i], s[n][j]) != ct(s[n + 1][j + 1], s[n][i]):
                    bad.append(f"s_{i} s_{j} != s_{j + 1} s_{i} at n={n}")
    return bad


def _cyclic_problems(X: FinCyclicSet) -> list[str]:
    N, d, s, t, c = X.N, X.d, X.s, X.t, X.card
    ct = compose_tables
    bad: list[str] = []
    for n in range(N + 1):
        power = identity_table(c[n])
        for _ in range(n + 1):
            power = ct(t[n], power)
        if power != identity_table(c[n]):
            bad.append(f"t^{{n+1}} != id at n={n}")
    for n in range(1, N + 1):
        if ct(d[n][0], t[n]) != d[n][n]:
            bad.append(f"d_0 t != d_n at n={n}")
        for i in range(1, n + 1):
            if ct(d[n][i], t[n]) != ct(t[n - 1], d[n][i - 1]):
                bad.append(f"d_{i} t != t d_{i - 1} at n={n}")
    for n in range(N):
        if ct(s[n][0], t[n]) != ct(t[n + 1], t[n + 1], s[n][n]):
            bad.append(f"s_0 t != t^2 s_n at n={n}")
        for i in range(1, n + 1):
            if ct(s[n][i], t[n]) != ct(t[n + 1], s[n][i - 1]):
                bad.append(f"s_{i} t != t s_{i - 1} at n={n}")
    return bad


def validate(X: FinSimplicialSet) -> list[str]:
    """Every violated identity, as readable strings; empty means valid."""
    return X.validate()


def from_json(obj: dict) -> FinSimplicialSet:
    kind = obj.get("kind")
    if kind == "cyclic-set":
        keys = {"kind", "truncation", "card", "d", "s", "t"}
    elif kind == "simplicial-set":
        keys = {"kind", "truncation", "card", "d", "s"}
    else:
        raise InvalidPresheaf(f"unknown presheaf kind {kind!r}")
    if set(obj) != keys:
        raise InvalidPresheaf(f"expected keys {sorted(keys)}, got {sorted(obj)}")
    if int(obj["truncation"]) != len(obj["card"]) - 1:
        raise InvalidPresheaf("truncation does not match card length")
    if kind == "cyclic-set":
        X = FinCyclicSet(obj["card"], obj["d"], obj["s"], obj["t"])
    else:
        X = FinSimplicialSet(obj["card"], obj["d"], obj["s"])
    problems = X.validate()
    if problems:
        raise InvalidPresheaf(problems[0])
    return X


# ---------------------------------------------------------------------------
# functorial evaluation


def _need(X: FinSimplicialSet, *levels: int) -> None:
    for lvl in levels:
        if lvl > X.N:
            raise TruncationExceeded(f"level {lvl} above truncation {X.N}")


def evaluate_ordinal(X: FinSimplicialSet, f: OrdinalMap) -> Table:
    """``X(f): X_m -> X_n`` for ``f: [n] -> [m]``, via the generator word of ``f``."""
    # the generator word may pass through max(n, m) at most
    _need(X, f.src, f.tgt)
    out = identity_table(X.card[f.src])
    # f = g_r o ... o g_1, so X(f) = X(g_1) o ... o X(g_r)
    for kind, k, i in delta.decompose_generators(f):
        tab = X.d[k][i] if kind == delta.FACE else X.s[k][i]
        out = compose_tables(out, tab)
    return out


def evaluate(X: FinSimplicialSet, phi) -> Table:
    """``X(phi)`` as a table from ``X_tgt`` to ``X_src``.

    Cyclic morphisms are split as ``iota(f) o tau^r`` so that
    ``X(phi) = t^r o X(f)``.
    """
    if isinstance(phi, OrdinalMap):
        return evaluate_ordinal(X, phi)
    if not isinstance(phi, CyclicMap):
        raise TypeError("expected an OrdinalMap or CyclicMap")
    if not X.cyclic:
        raise DegreeMismatch("cyclic morphisms act only on cyclic sets")
    pair = cyclic.canonical_factor(phi)
    out = evaluate_ordinal(X, pair.delta_part)
    for _ in range(pair.rotation):
        out = compose_tables(X.t[phi.src], out)
    return out


def act(X: FinSimplicialSet, phi, x: int) -> int:
    return evaluate(X, phi)[x]


def underlying_simplicial(X: FinCyclicSet) -> FinSimplicialSet:
    """Forget the cyclic operators."""
    return FinSimplicialSet(X.card, X.d, X.s, X.labels)


# ---------------------------------------------------------------------------
# natural transformations


class PresheafMap:
    """Levelwise functions ``levels[n]: A_n -> B_n``."""

    def __init__(self, source: FinSimplicialSet, target: FinSimplicialSet, levels):
        if source.N != target.N:
            raise DegreeMismatch(f"truncations differ: {source.N} vs {target.N}")
        if source.cyclic != target.cyclic:
            raise DegreeMismatch("cannot map between simplicial and cyclic sets")
        self.source = source
        self.target = target
        self.levels = [tuple(int(v) for v in lvl) for lvl in levels]
        if len(self.levels) != source.N + 1:
            raise InvalidPresheaf("map needs one table per level")
        for n, tab in enumerate(self.levels):
            _check_table(tab, source.card[n], target.card[n], f"map level {n}")

    def problems(self) -> list[str]:
        out = []
        tgt_ops = {key: tab for key, _, _, tab in self.target.operators()}
        for key, a, b, tab in self.source.operators():
            lhs = compose_tables(self.levels[b], tab)
            rhs = compose_tables(tgt_ops[key], self.levels[a])
            if lhs != rhs:
                out.append(f"not natural for {key[0]}[{key[1]}][{key[2]}]")
        return out

    @property
    def is_injective(self) -> bool:
        return all(len(set(tab)) == len(tab) for tab in self.levels)

    @property
    def is_surjective(self) -> bool:
        return all(len(set(tab)) == c for tab, c in zip(self.levels, self.target.card))

    @property
    def is_iso(self) -> bool:
        return self.is_injective and self.is_surjective

    def __call__(self, n: int, x: int) -> int:
        return self.levels[n][x]

    def __eq__(self, other) -> bool:
        return isinstance(other, PresheafMap) and self.levels == other.levels

    def __hash__(self) -> int:
        return hash(tuple(self.levels))

    def to_json(self, embed: bool = False) -> dict:
        out = {"kind": "presheaf-map", "levels": [list(t) for t in self.levels]}
        if embed:
            out["source"] = self.source.to_json()
            out["target"] = self.target.to_json()
        return out

    def __repr__(self) -> str:
        return f"PresheafMap({self.source!r} -> {self.target!r})"


def compose_maps(g: PresheafMap, f: PresheafMap) -> PresheafMap:
    """``g o f``."""
    return PresheafMap(f.source, g.target, [compose_tables(gt, ft) for gt, ft in zip(g.levels, f.levels)])


def identity_map(X: FinSimplicialSet) -> PresheafMap:
    return PresheafMap(X, X, [identity_table(c) for c in X.card])


def map_from_json(obj: dict, source: FinSimplicialSet | None = None,
                  target: FinSimplicialSet | None = None) -> PresheafMap:
    """Parse a map; ``source``/``target`` may instead be embedded in the JSON."""
    allowed = {"kind", "levels", "source", "target"}
    if obj.get("kind") != "presheaf-map" or not set(obj) <= allowed or "levels" not in obj:
        raise InvalidPresheaf("expected a presheaf-map object")
    if source is None:
        if "source" not in obj:
            raise InvalidPresheaf("map has no source presheaf")
        source = from_json(obj["source"])
    if target is None:
        if "target" not in obj:
            raise InvalidPresheaf("map has no target presheaf")
        target = from_json(obj["target"])
    f = PresheafMap(source, target, obj["levels"])
    problems = f.problems()
    if problems:
        raise InvalidPresheaf(problems[0])
    return f


# ---------------------------------------------------------------------------
# small building blocks


def empty_like(N: int, cyclic_flavor: bool = True) -> FinSimplicialSet:
    card = [0] * (N + 1)
    d = [[()] * (n + 1) if n else [] for n in range(N + 1)]
    s = [[()] * (n + 1) if n < N else [] for n in range(N + 1)]
    if cyclic_flavor:
        return FinCyclicSet(card, d, s, [()] * (N + 1))
    return FinSimplicialSet(card, d, s)


def point(N: int, cyclic_flavor: bool = True) -> FinSimplicialSet:
    """The terminal presheaf: one element in every level."""
    card = [1] * (N + 1)
    d = [[(0,)] * (n + 1) if n else [] for n in range(N + 1)]
    s = [[(0,)] * (n + 1) if n < N else [] for n in range(N + 1)]
    if cyclic_flavor:
        return FinCyclicSet(card, d, s, [(0,)] * (N + 1))
    return FinSimplicialSet(card, d, s)


def constant(size: int, N: int, cyclic_flavor: bool = True) -> FinSimplicialSet:
    """The discrete presheaf with ``size`` elements in every level."""
    ident = identity_table(size)
    card = [size] * (N + 1)
    d = [[ident] * (n + 1) if n else [] for n in range(N + 1)]
    s = [[ident] * (n + 1) if n < N else [] for n in range(N + 1)]
    if cyclic_flavor:
        return FinCyclicSet(card, d, s, [ident] * (N + 1))
    return FinSimplicialSet(card, d, s)


def terminal_map(X: FinSimplicialSet) -> PresheafMap:
    P = point(X.N, X.cyclic)
    return PresheafMap(X, P, [(0,) * c for c in X.card])


def initial_map(X: FinSimplicialSet) -> PresheafMap:
    E = empty_like(X.N, X.cyclic)
    return PresheafMap(E, X, [()] * (X.N + 1))


def build_from_action(levels: list[list], N: int, d_fn, s_fn, t_fn=None, labels: bool = True):
    """Assemble tables from element lists and operator functions on labels.

    ``d_fn(n, i, x)`` etc. return a label of the target level.
    """
    index = [{x: k for k, x in enumerate(lvl)} for lvl in levels]
    d = [[tuple(index[n - 1][d_fn(n, i, x)] for x in levels[n]) for i in range(n + 1)] if n else []
         for n in range(N + 1)]
    s = [[tuple(index[n + 1][s_fn(n, i, x)] for x in levels[n]) for i in range(n + 1)] if n < N else []
         for n in range(N + 1)]
    card = [len(lvl) for lvl in levels]
    lab = [list(lvl) for lvl in levels] if labels else None
    if t_fn is None:
        return FinSimplicialSet(card, d, s, lab)
    t = [tuple(index[n][t_fn(n, x)] for x in levels[n]) for n in range(N + 1)]
    return FinCyclicSet(card, d, s, t, lab)
