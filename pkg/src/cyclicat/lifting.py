"""Right lifting properties between maps of finite presheaves, by exhaustive search.

All verdicts about fibrations are certificates up to a stated degree only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeMismatch, ResourceLimit, TruncationTooLow
from .presheaf import PresheafMap, compose_maps, iter_maps
from .reedy import cset_acyclic_generators, cset_generators


@dataclass
class LiftingProblem:
    """A commuting square ``top: A -> X``, ``bottom: B -> Y`` against ``i: A -> B`` and ``p: X -> Y``."""

    i: PresheafMap
    p: PresheafMap
    top: PresheafMap
    bottom: PresheafMap

    def commutes(self) -> bool:
        return compose_maps(self.p, self.top) == compose_maps(self.bottom, self.i)

    def is_lift(self, h: PresheafMap) -> bool:
        return (not h.problems() and compose_maps(h, self.i) == self.top
                and compose_maps(self.p, h) == self.bottom)

    def to_json(self) -> dict:
        return {"top": self.top.to_json(), "bottom": self.bottom.to_json()}


def _preimages(p: PresheafMap) -> list[dict[int, list[int]]]:
    out = []
    for n, tab in enumerate(p.levels):
        pre: dict[int, list[int]] = {y: [] for y in range(p.target.card[n])}
        for x, y in enumerate(tab):
            pre[y].append(x)
        out.append(pre)
    return out


def _check_shapes(i: PresheafMap, p: PresheafMap) -> None:
    if i.source.N != p.source.N or i.source.cyclic != p.source.cyclic:
        raise DegreeMismatch("lifting problems need matching flavor and truncation")


def iter_squares(i: PresheafMap, p: PresheafMap):
    _check_shapes(i, p)
    pre = _preimages(p)
    A, B, X, Y = i.source, i.target, p.source, p.target
    for bottom in iter_maps(B, Y):
        allowed = {
            (n, a): pre[n][bottom.levels[n][i.levels[n][a]]]
            for n in range(A.N + 1) for a in range(A.card[n])
        }
        for top in iter_maps(A, X, allowed):
            yield LiftingProblem(i, p, top, bottom)


def enumerate_squares(i: PresheafMap, p: PresheafMap, limit: int = 100_000) -> list[LiftingProblem]:
    out = []
    for sq in iter_squares(i, p):
        out.append(sq)
        if len(out) > limit:
            raise ResourceLimit(f"more than {limit} lifting squares")
    return out


def solve(problem: LiftingProblem) -> PresheafMap | None:
    """A diagonal ``B -> X`` making both triangles commute, or ``None``."""
    i, p, top, bottom = problem.i, problem.p, problem.top, problem.bottom
    pre = _preimages(p)
    B = i.target
    allowed = {(n, b): set(pre[n][bottom.levels[n][b]]) for n in range(B.N + 1) for b in range(B.card[n])}
    for n in range(i.source.N + 1):
        for a, b in enumerate(i.levels[n]):
            allowed[n, b] &= {top.levels[n][a]}
    for h in iter_maps(B, p.source, allowed):
        return h
    return None


@dataclass
class RLPVerdict:
    holds: bool
    squares: int
    witness: LiftingProblem | None = None
    lifts_checked: int = 0

    def to_json(self) -> dict:
        out = {"holds": self.holds, "squares": self.squares}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def has_rlp(p: PresheafMap, i: PresheafMap) -> RLPVerdict:
    """Does ``p`` have the right lifting property against ``i``?

    Every lift found is re-verified; a failing square is returned as witness.
    """
    count = 0
    checked = 0
    for sq in iter_squares(i, p):
        count += 1
        h = solve(sq)
        if h is None:
            return RLPVerdict(False, count, sq, checked)
        if not sq.is_lift(h):
            raise AssertionError("search returned a non-lift")
        checked += 1
    return RLPVerdict(True, count, None, checked)


@dataclass
class FibrationReport:
    max_degree: int
    holds: bool = True
    results: list[dict] = field(default_factory=list)
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"up_to_degree": self.max_degree, "holds": self.holds, "results": self.results}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def __bool__(self) -> bool:
        return self.holds


def _headroom(p: PresheafMap, N: int) -> int:
    T = p.source.N
    if T < N + 1:
        raise TruncationTooLow(f"truncation {T} leaves no headroom above degree {N}")
    return T


def _against(p: PresheafMap, gens, N: int) -> FibrationReport:
    rep = FibrationReport(N)
    for label, i in gens:
        v = has_rlp(p, i)
        rep.results.append({"generator": label, "holds": v.holds, "squares": v.squares})
        if not v.holds:
            rep.holds = False
            rep.witness = {"generator": label, **v.to_json()}
            break
    return rep


def is_acyclic_fibration_up_to(p: PresheafMap, N: int) -> FibrationReport:
    """RLP against the boundary inclusions into ``Lambda[n]`` for ``n <= N``."""
    T = _headroom(p, N)
    gens = [(f"boundary({n})", cset_generators(n, T)) for n in range(N + 1)]
    return _against(p, gens, N)


def is_fibration_up_to(p: PresheafMap, N: int) -> FibrationReport:
    """RLP against the horn inclusions into ``Lambda[n]`` for ``1 <= n <= N``."""
    T = _headroom(p, N)
    gens = [(f"horn({n},{k})", cset_acyclic_generators(n, k, T)) for n in range(1, N + 1) for k in range(n + 1)]
    return _against(p, gens, N)
