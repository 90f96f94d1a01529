"""Enumeration of presheaf maps by backtracking with constraint propagation.

Assigning a value to one element forces the values on everything reachable
from it through the operators, so the search branches only on a few
generating elements.
"""

from __future__ import annotations

from typing import Iterator

from ..errors import DegreeMismatch, ResourceLimit
from .core import FinSimplicialSet, PresheafMap

Node = tuple[int, int]


class _Plan:
    def __init__(self, A: FinSimplicialSet, X: FinSimplicialSet):
        if A.N != X.N or A.cyclic != X.cyclic:
            raise DegreeMismatch("source and target must have the same flavor and truncation")
        self.A, self.X = A, X
        xtabs = {key: tab for key, _, _, tab in X.operators()}
        # edges[(n, a)] = [((m, b), table of X from level n to level m)]
        self.edges: dict[Node, list[tuple[Node, tuple]]] = {
            (n, a): [] for n in range(A.N + 1) for a in range(A.card[n])
        }
        for key, n, m, tab in A.operators():
            xt = xtabs[key]
            for a, b in enumerate(tab):
                self.edges[n, a].append(((m, b), xt))
        self.order = self._order()

    def _order(self) -> list[Node]:
        sizes = {}
        for node in self.edges:
            seen = {node}
            stack = [node]
            while stack:
                u = stack.pop()
                for v, _ in self.edges[u]:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            sizes[node] = len(seen)
        return sorted(self.edges, key=lambda u: (-sizes[u], -u[0], u[1]))


def iter_maps(A: FinSimplicialSet, X: FinSimplicialSet, allowed=None) -> Iterator[PresheafMap]:
    """Yield every natural map ``A -> X`` in a deterministic order.

    ``allowed`` optionally maps ``(level, element)`` to a collection of
    permitted images; elements not mentioned are unconstrained.
    """
    plan = _Plan(A, X)
    allowed = allowed or {}
    assign: dict[Node, int] = {}
    order = plan.order

    def propagate(node: Node, value: int, trail: list[Node]) -> bool:
        stack = [(node, value)]
        while stack:
            u, val = stack.pop()
            cur = assign.get(u)
            if cur is not None:
                if cur != val:
                    return False
                continue
            ok = allowed.get(u)
            if ok is not None and val not in ok:
                return False
            assign[u] = val
            trail.append(u)
            for v, xt in plan.edges[u]:
                stack.append((v, xt[val]))
        return True

    def search(pos: int) -> Iterator[PresheafMap]:
        while pos < len(order) and order[pos] in assign:
            pos += 1
        if pos == len(order):
            levels = [tuple(assign[n, a] for a in range(A.card[n])) for n in range(A.N + 1)]
            yield PresheafMap(A, X, levels)
            return
        node = order[pos]
        cands = allowed.get(node)
        cands = sorted(cands) if cands is not None else range(X.card[node[0]])
        for val in cands:
            trail: list[Node] = []
            if propagate(node, val, trail):
                yield from search(pos + 1)
            for u in trail:
                del assign[u]

    yield from search(0)


def enumerate_maps(A: FinSimplicialSet, X: FinSimplicialSet, allowed=None,
                   limit: int | None = None) -> list[PresheafMap]:
    out = []
    bound = limit if limit is not None else 200_000
    for f in iter_maps(A, X, allowed):
        out.append(f)
        if len(out) > bound:
            raise ResourceLimit(f"more than {bound} maps")
    return out


def count_maps(A: FinSimplicialSet, X: FinSimplicialSet, allowed=None) -> int:
    return sum(1 for _ in iter_maps(A, X, allowed))


def find_map(A: FinSimplicialSet, X: FinSimplicialSet, allowed=None) -> PresheafMap | None:
    return next(iter_maps(A, X, allowed), None)
