"""Connes' cyclic category.

A morphism ``<n> -> <m>`` is a class of monotone maps ``F: Z -> Z`` with
``F(i + n + 1) = F(i) + m + 1``, modulo adding ``m + 1``.  We store the values
``F(0), ..., F(n)`` (the *window*) of the unique representative whose first
value lies in ``[0, m]``.

The cyclic generator ``tau(n)`` is the shift ``i -> i - 1 (mod n + 1)`` on
underlying points.  With this orientation the relations

    tau o d_0 = d_n,            tau o d_i = d_{i-1} o tau      (1 <= i <= n)
    tau o s_0 = s_n o tau^2,    tau o s_i = s_{i-1} o tau      (1 <= i <= n)

hold on the nose, and ``s_n^*`` fixes every power ``tau^k`` with ``k <= n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

from . import delta
from .delta import OrdinalMap
from .errors import (
    DegreeMismatch,
    IncompatibleFiberOrder,
    NotMonotone,
    NotNormalized,
    OutOfRange,
    WrapViolation,
    WrongLength,
    check_limit,
)


@dataclass(frozen=True, order=True)
class CyclicMap:
    """A morphism ``<src> -> <tgt>`` in normalized window form.

    No validation happens here; use :func:`make_cyclic_map` or
    :func:`normalize` for untrusted input.
    """

    src: int
    tgt: int
    window: tuple[int, ...]

    def lift(self, x: int) -> int:
        """Evaluate the equivariant extension at an arbitrary integer."""
        q, r = divmod(x, self.src + 1)
        return self.window[r] + q * (self.tgt + 1)

    def to_json(self) -> dict:
        return {"cat": "lambda", "src": self.src, "tgt": self.tgt, "window": list(self.window)}


@dataclass(frozen=True)
class CanonicalPair:
    """``phi = iota(delta_part) o tau^rotation`` with ``0 <= rotation <= src``."""

    delta_part: OrdinalMap
    rotation: int

    def to_json(self) -> dict:
        return {"delta": self.delta_part.to_json(), "rot": self.rotation}


@dataclass(frozen=True)
class UnderlyingData:
    """Set map on marked points plus a linear order on every fiber."""

    set_map: tuple[int, ...]
    fiber_orders: tuple[tuple[int, ...], ...]


def _check_window(n: int, m: int, window: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(v) for v in window)
    if n < 0 or m < 0:
        raise OutOfRange("objects are indexed by non-negative integers")
    if len(w) != n + 1:
        raise WrongLength(f"expected window of length {n + 1}, got {len(w)}", index=min(len(w), n + 1))
    for i in range(1, n + 1):
        if w[i] < w[i - 1]:
            raise NotMonotone(f"window decreases at index {i}", index=i)
    if w[n] > w[0] + m + 1:
        raise WrapViolation(f"W[{n}]={w[n]} exceeds W[0]+{m + 1}={w[0] + m + 1}", index=n)
    return w


def make_cyclic_map(n: int, m: int, window: Sequence[int]) -> CyclicMap:
    w = _check_window(n, m, window)
    if not 0 <= w[0] <= m:
        raise NotNormalized(f"W[0]={w[0]} not in [0, {m}]", index=0)
    return CyclicMap(n, m, w)


def _normal(n: int, m: int, w: Sequence[int]) -> CyclicMap:
    q = w[0] // (m + 1)
    if q:
        shift = q * (m + 1)
        w = tuple(v - shift for v in w)
    return CyclicMap(n, m, tuple(w))


def normalize(n: int, m: int, window: Sequence[int]) -> CyclicMap:
    """Pick the orbit representative with first value in ``[0, m]``."""
    return _normal(n, m, _check_window(n, m, window))


def identity(n: int) -> CyclicMap:
    return CyclicMap(n, n, tuple(range(n + 1)))


def tau(n: int) -> CyclicMap:
    """The cyclic generator of ``Aut<n>``: underlying shift ``i -> i - 1``."""
    return tau_power(n, 1)


def tau_power(n: int, k: int) -> CyclicMap:
    k %= n + 1
    return _normal(n, n, tuple(i - k for i in range(n + 1)))


def compose_cyclic(g: CyclicMap, f: CyclicMap) -> CyclicMap:
    """Return ``g o f``, computed on equivariant lifts."""
    if f.tgt != g.src:
        raise DegreeMismatch(f"cannot compose <{g.src}>-><{g.tgt}> after <{f.src}>-><{f.tgt}>")
    p, k1, gw = g.src + 1, g.tgt + 1, g.window
    out = []
    for x in f.window:
        q, r = divmod(x, p)
        out.append(gw[r] + q * k1)
    return _normal(f.src, g.tgt, out)


def iota(f: OrdinalMap) -> CyclicMap:
    """Cyclic closure of a simplex-category map."""
    return CyclicMap(f.src, f.tgt, f.images)


def rotation_exponent(phi: CyclicMap) -> int:
    """For an automorphism, the ``k`` in ``phi = tau^k``."""
    if phi.src != phi.tgt:
        raise DegreeMismatch("rotation_exponent needs an endomorphism")
    return canonical_factor(phi).rotation


def canonical_factor(phi: CyclicMap) -> CanonicalPair:
    """Split ``phi`` as ``iota(f) o tau^r``."""
    n, m, w = phi.src, phi.tgt, phi.window
    # number of window entries that wrapped past m; they belong to the first cut
    wrapped = sum(1 for v in w if v > m)
    images = tuple(w[(j - wrapped) % (n + 1)] - (m + 1) * (j < wrapped) for j in range(n + 1))
    return CanonicalPair(OrdinalMap(n, m, images), (-wrapped) % (n + 1))


def from_canonical(pair: CanonicalPair) -> CyclicMap:
    f = pair.delta_part
    return compose_cyclic(iota(f), tau_power(f.src, pair.rotation))


def underlying(phi: CyclicMap) -> tuple[int, ...]:
    m1 = phi.tgt + 1
    return tuple(v % m1 for v in phi.window)


def to_underlying_data(phi: CyclicMap) -> UnderlyingData:
    n, m = phi.src, phi.tgt
    # walk one period of the lift starting just after the last element of the
    # fiber containing position 0, so every fiber appears as a contiguous run
    fibers: dict[int, list[int]] = {j: [] for j in range(m + 1)}
    start = 0
    w = phi.window
    while start <= n and w[start] == w[0]:
        start += 1
    if start > n:
        # constant lift over the whole period
        fibers[w[0] % (m + 1)] = list(range(n + 1))
    else:
        seq = [phi.lift(x) for x in range(start, start + n + 1)]
        for x, v in zip(range(start, start + n + 1), seq):
            fibers[v % (m + 1)].append(x % (n + 1))
    return UnderlyingData(underlying(phi), tuple(tuple(fibers[j]) for j in range(m + 1)))


def is_cyclically_monotone(u: Sequence[int], m: int) -> tuple[bool, tuple[int, int] | None]:
    """Search cut pairs ``(i, j)`` making ``u`` monotone.

    The source is read as ``i+1, ..., n, 0, ..., i`` and the target as
    ``j+1, ..., m, 0, ..., j``.  Returns the lexicographically least
    witness, or ``(False, None)``.
    """
    n = len(u) - 1
    for i in range(n + 1):
        order = [(i + 1 + k) % (n + 1) for k in range(n + 1)]
        for j in range(m + 1):
            rank = [(u[x] - j - 1) % (m + 1) for x in order]
            if all(a <= b for a, b in zip(rank, rank[1:])):
                return True, (i, j)
    return False, None


def winding(u: Sequence[int], m: int) -> int:
    """Total forward travel of ``u`` around the circle, in units of ``m + 1``."""
    n1 = len(u)
    return sum((u[(i + 1) % n1] - u[i]) % (m + 1) for i in range(n1)) // (m + 1)


def fiber_over_underlying(u: Sequence[int], m: int) -> list[CyclicMap]:
    """All morphisms whose underlying map is ``u``."""
    u = tuple(u)
    n = len(u) - 1
    ok, _ = is_cyclically_monotone(u, m)
    if not ok:
        return []
    if len(set(u)) == 1:
        j = u[0]
        out = [_normal(n, m, [j + (m + 1) * (i >= a) for i in range(n + 1)]) for a in range(n + 1)]
        return sorted(set(out))
    # lift monotonically, starting at a position where u jumps
    start = next(i for i in range(n + 1) if u[i] != u[i - 1])
    vals = [u[start]]
    for k in range(1, n + 1):
        x = (start + k) % (n + 1)
        prev = (start + k - 1) % (n + 1)
        vals.append(vals[-1] + (u[x] - u[prev]) % (m + 1))
    window = [0] * (n + 1)
    for k, v in enumerate(vals):
        x = start + k
        window[x % (n + 1)] = v - (m + 1) * (x // (n + 1))
    return [_normal(n, m, window)]


def from_underlying_data(data: UnderlyingData) -> CyclicMap:
    u = data.set_map
    m = len(data.fiber_orders) - 1
    for phi in fiber_over_underlying(u, m):
        if to_underlying_data(phi) == data:
            return phi
    raise IncompatibleFiberOrder("fiber orders are not compatible with any cyclic morphism")


def count_hom(n: int, m: int) -> int:
    return (n + 1) * comb(n + m + 1, n + 1)


def iter_hom(n: int, m: int) -> Iterator[CyclicMap]:
    top = m + 1
    for w0 in range(m + 1):
        for rest in combinations_with_replacement(range(w0, w0 + top + 1), n):
            yield CyclicMap(n, m, (w0,) + rest)


def enumerate_hom(n: int, m: int, limit: int | None = None) -> list[CyclicMap]:
    """All morphisms ``<n> -> <m>``, sorted by window."""
    check_limit(count_hom(n, m), limit, f"Hom(<{n}>,<{m}>)")
    return list(iter_hom(n, m))


def automorphisms(n: int) -> list[CyclicMap]:
    """``[tau^0, tau^1, ..., tau^n]``, indexed by exponent."""
    return [tau_power(n, k) for k in range(n + 1)]


def dual(phi: CyclicMap) -> CyclicMap:
    """Self-duality of the cyclic category, ``<n> -> <m>`` to ``<m> -> <n>``.

    ``V_j = -min{i : F(i) >= -j}``, renormalized.
    """
    n, m = phi.src, phi.tgt
    out = []
    for j in range(m + 1):
        target = -j
        # start from a multiple of the period where F is still below target
        q = (target - phi.window[0] - 1) // (m + 1)
        i = (n + 1) * q
        while phi.lift(i) < target:
            i += 1
        out.append(-i)
    return _normal(m, n, out)


def star_action(phi: OrdinalMap, g: int) -> tuple[OrdinalMap, int]:
    """Crossed action: ``tau_m^g o iota(phi) = iota(psi) o tau_n^{g'}``."""
    if not 0 <= g <= phi.tgt:
        raise OutOfRange(f"rotation exponent {g} outside [0, {phi.tgt}]")
    pair = canonical_factor(compose_cyclic(tau_power(phi.tgt, g), iota(phi)))
    return pair.delta_part, pair.rotation


def from_json(obj: dict) -> CyclicMap:
    if obj.get("cat") != "lambda":
        raise ValueError("expected a lambda morphism")
    return make_cyclic_map(int(obj["src"]), int(obj["tgt"]), obj["window"])


def face(n: int, i: int) -> CyclicMap:
    return iota(delta.face(n, i))


def degeneracy(n: int, i: int) -> CyclicMap:
    return iota(delta.degeneracy(n, i))


def check_cyclic_identities(N: int) -> list[str]:
    """Every failing relation between ``tau`` and the generators, degrees <= N."""
    bad = []
    c = compose_cyclic
    for n in range(N + 1):
        power = identity(n)
        for _ in range(n + 1):
            power = c(tau(n), power)
        if power != identity(n):
            bad.append(f"tau^(n+1) != id at n={n}")
        if n >= 1:
            if c(tau(n), face(n, 0)) != face(n, n):
                bad.append(f"tau d0 != dn at n={n}")
            for i in range(1, n + 1):
                if c(tau(n), face(n, i)) != c(face(n, i - 1), tau(n - 1)):
                    bad.append(f"tau d{i} != d{i - 1} tau at n={n}")
        if n + 1 <= N:
            if c(tau(n), degeneracy(n, 0)) != c(degeneracy(n, n), tau_power(n + 1, 2)):
                bad.append(f"tau s0 != sn tau^2 at n={n}")
            for i in range(1, n + 1):
                if c(tau(n), degeneracy(n, i)) != c(degeneracy(n, i - 1), tau(n + 1)):
                    bad.append(f"tau s{i} != s{i - 1} tau at n={n}")
    return bad
