"""Small hand-checkable cases, one or two asserts each."""

import pytest

from cyclicat import crossed, cyclic, delta, lifting, reedy, segal
from cyclicat import presheaf as ps
from cyclicat.errors import InvalidPresheaf, NotMonotone, WrapViolation


def test_ordinal_maps():
    assert delta.make_ordinal_map(1, 1, [0, 1]) == delta.identity(1)
    with pytest.raises(NotMonotone) as exc:
        delta.make_ordinal_map(1, 1, [1, 0])
    assert exc.value.index == 1
    assert delta.make_ordinal_map(2, 3, [0, 2, 2]).images == (0, 2, 2)
    assert delta.degeneracy(1, 0).images == (0, 0, 1)
    assert delta.face(1, 0).images == (1,)


def test_ordinal_composition():
    assert delta.compose_ordinal(delta.degeneracy(0, 0), delta.face(1, 0)) == delta.identity(0)
    assert delta.compose_ordinal(delta.face(2, 2), delta.face(1, 0)).images == (1,)


def test_decompositions():
    assert delta.decompose_generators(delta.identity(3)) == []
    assert delta.decompose_generators(delta.face(2, 1)) == [("face", 2, 1)]
    f = delta.make_ordinal_map(1, 1, [0, 0])
    assert delta.decompose_generators(f) == [("degeneracy", 0, 0), ("face", 1, 1)]


def test_monotone_counts():
    assert [delta.count_monotone(0, m) for m in range(4)] == [1, 2, 3, 4]
    assert [f.images for f in delta.enumerate_monotone(1, 1)] == [(0, 0), (0, 1), (1, 1)]
    assert len(delta.enumerate_monotone(2, 2)) == 10


def test_interval_dual_cases():
    assert delta.interval_dual(delta.identity(1)) == delta.make_endpoint_map(2, 2, [0, 1, 2])
    assert delta.interval_dual(delta.make_ordinal_map(1, 0, [0, 0])).images == (0, 2)


def test_windows():
    assert cyclic.make_cyclic_map(1, 1, [0, 1]) == cyclic.identity(1)
    assert cyclic.normalize(1, 1, [2, 3]).window == (0, 1)
    with pytest.raises(WrapViolation):
        cyclic.make_cyclic_map(1, 0, [0, 2])


def test_rotations():
    assert cyclic.tau(1).window == (1, 2)
    assert cyclic.tau_power(2, 3) == cyclic.identity(2)
    assert cyclic.tau_power(1, -1).window == (1, 2)
    assert cyclic.compose_cyclic(cyclic.tau(1), cyclic.tau(1)) == cyclic.identity(1)


def test_rotated_degeneracy_is_the_other_lift():
    s = cyclic.degeneracy(0, 0)
    assert s.window == (0, 0)
    assert cyclic.compose_cyclic(s, cyclic.tau(1)).window == (0, 1)


def test_iota_cases():
    assert cyclic.iota(delta.identity(2)) == cyclic.identity(2)
    assert cyclic.iota(delta.face(1, 0)).window == (1,)
    for a, b, k in [(0, 1, 2), (1, 2, 1), (2, 2, 3)]:
        for f in delta.iter_monotone(a, b):
            for g in delta.iter_monotone(b, k):
                assert cyclic.iota(delta.compose_ordinal(g, f)) == cyclic.compose_cyclic(cyclic.iota(g), cyclic.iota(f))


def test_canonical_cases():
    pair = cyclic.canonical_factor(cyclic.tau(1))
    assert pair.delta_part == delta.identity(1) and pair.rotation == 1
    f = delta.make_ordinal_map(2, 3, [0, 2, 2])
    assert cyclic.canonical_factor(cyclic.iota(f)) == cyclic.CanonicalPair(f, 0)


def test_underlying_cases():
    # rotation by one, in the i -> i - 1 convention used throughout
    assert cyclic.underlying(cyclic.tau(2)) == (2, 0, 1)
    assert {cyclic.underlying(f) for f in cyclic.enumerate_hom(1, 0)} == {(0, 0)}
    assert cyclic.is_cyclically_monotone((0, 0, 0), 1)[0]
    assert cyclic.is_cyclically_monotone(cyclic.underlying(cyclic.tau(2)), 2)[0]
    assert cyclic.is_cyclically_monotone((0, 2, 1, 3), 3) == (False, None)


def test_fiber_cases():
    assert len(cyclic.fiber_over_underlying((0, 0, 0), 0)) == 3
    assert len(cyclic.fiber_over_underlying(cyclic.underlying(cyclic.tau(1)), 1)) == 1
    assert cyclic.fiber_over_underlying((0, 2, 1, 3), 3) == []


def test_hom_cases():
    assert [cyclic.count_hom(1, 0), cyclic.count_hom(0, 0), cyclic.count_hom(1, 1)] == [2, 1, 6]


def test_dual_cases():
    assert cyclic.dual(cyclic.identity(3)) == cyclic.identity(3)
    assert cyclic.dual(cyclic.degeneracy(0, 0)) == cyclic.make_cyclic_map(0, 1, [0])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_star_action_on_degeneracies(n):
    f = delta.make_ordinal_map(2, 1, [0, 1, 1])
    assert cyclic.star_action(f, 0) == (f, 0)
    assert [cyclic.star_action(delta.degeneracy(n, n), k)[1] for k in range(n + 1)] == list(range(n + 1))
    assert cyclic.star_action(delta.degeneracy(n, n - 1), n)[1] == n + 1


def test_crossed_cases():
    assert crossed.verify_csg_axioms(crossed.lambda_oracle(), 4).passed
    lam = crossed.lambda_oracle()
    tampered = crossed.CrossedCategoryOracle(
        "tampered", lam.hom, lambda g, f: cyclic.compose_cyclic(cyclic.tau(g.tgt), cyclic.compose_cyclic(g, f)),
        lam.identity, lam.embed, lam.automorphisms)
    rep = crossed.verify_csg_axioms(tampered, 2)
    assert not rep.passed and rep.counterexamples
    assert crossed.build_G_star(lam, 3).card == [1, 2, 3, 4]
    assert crossed.build_G_star(crossed.sym_oracle(), 3).card == [1, 2, 6, 24]
    assert crossed.build_G_star(crossed.delta_oracle(), 3).card == [1, 1, 1, 1]
    assert len(crossed.enumerate_sym(1, 0)) == 2


def test_validation_reports_rotation_order():
    X = ps.cyclic_nerve(ps.cyclic_group_table(2), 2)
    obj = X.to_json()
    obj["t"][1] = [1, 2, 3, 0]  # a 4-cycle, so t^2 is not the identity
    with pytest.raises(InvalidPresheaf) as exc:
        ps.from_json(obj)
    assert "t^{n+1} != id at n=1" in str(exc.value)


def test_evaluate_cases():
    X = ps.cyclic_nerve(ps.cyclic_group_table(3), 2)
    assert list(ps.evaluate(X, cyclic.identity(2))) == list(range(X.card[2]))
    for n in range(3):
        assert list(ps.evaluate(X, cyclic.tau(n))) == list(X.t[n])


def test_representable_cases():
    assert ps.representable_cyclic(1, 2).card == [2, 6, 12]
    assert ps.representable_cyclic(0, 3).card == [1, 2, 3, 4]
    assert ps.representable_simplicial(3, 1).card[0] == 4
    assert ps.underlying_simplicial(ps.representable_cyclic(0, 3)).card == [1, 2, 3, 4]
    C = ps.constant(3, 2)
    assert ps.underlying_simplicial(C).card == [3, 3, 3]


def test_generated_subobject_cases():
    R = ps.representable_cyclic(1, 2)
    all_seeds = [(n, x) for n in range(R.N + 1) for x in range(R.card[n])]
    assert ps.generated_subobject(R, all_seeds)[0].card == R.card
    # the rotation on level 0 is trivial, so one vertex generates no other vertex
    assert ps.generated_subobject(R, [(0, 0)])[0].card[0] == 1
    assert ps.generated_subobject(R, [])[0].card == [0, 0, 0]


def test_boundary_and_horn_cases():
    b = ps.boundary_faces(1, 2)
    h = ps.cyclic_horn(1, 0, 2)
    assert b.source.card[0] == 2
    assert all(x <= y <= z for x, y, z in zip(h.source.card, b.source.card, b.target.card))
    assert h.source.card != b.source.card and b.source.card != b.target.card
    for n in (1, 2):
        bd = ps.boundary_faces(n, 2)
        union = [set() for _ in range(3)]
        for k in range(n + 1):
            hk = ps.cyclic_horn(n, k, 2)
            for lvl in range(3):
                union[lvl] |= set(hk.levels[lvl])
        assert [sorted(u) for u in union] == [sorted(t) for t in bd.levels]


def test_spine_cases():
    G, to_R = ps.spine(1, 2)
    assert to_R.is_iso
    G, to_R = ps.spine(3, 3)
    assert G.card[0] == 4


def test_triangulation_object_cases():
    T = segal.make_triangulation(3, [(0, 1, 2), (0, 2, 3)])
    obj, inc = ps.triangulation_object(T, "simplicial", 3)
    assert ps.nondegenerate_counts(obj, check_top=False)[2] == 2
    obj, inc = ps.triangulation_object(segal.make_triangulation(2, [(0, 1, 2)]), "simplicial", 2)
    assert inc.is_iso
    obj, inc = ps.triangulation_object(segal.make_triangulation(3, [(0, 1, 3), (1, 2, 3)]), "cyclic", 3)
    assert obj.validate() == [] and inc.is_injective


def test_pushout_cases():
    b = ps.boundary_faces(1, 2)
    po = ps.pushout(ps.identity_map(b.source), b)
    assert po.obj.card == b.target.card
    v = ps.yoneda_map(ps.representable_cyclic(1, 2), 0, 1)
    w = ps.yoneda_map(ps.representable_cyclic(1, 2), 0, 0)
    glued = ps.pushout(v, w).obj
    G, _ = ps.spine(2, 2)
    assert glued.card == G.card


def test_euler_cases():
    for n in range(4):
        assert ps.euler_characteristic(ps.representable_simplicial(n, n + 1)) == 1
    assert ps.kan_extend(ps.empty_like(1, False), 2).card == [0, 0, 0]


def test_kan_extension_of_interval():
    assert ps.kan_extend_representable_comparison(1, 3).is_iso


def test_nerve_cases():
    assert ps.nerve(ps.cyclic_group_table(2), 3).card == [1, 2, 4, 8]
    assert ps.nerve([[0]], 3).card == [1, 1, 1, 1]
    assert ps.cyclic_nerve(ps.cyclic_group_table(2), 3).validate() == []


def test_biproduct_cases():
    f = ps.biproduct_generator(0, 0, "reedy-cof", (1, 1))
    assert all(c == 0 for row in f.source.ver for c in row.card)
    for m, n in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        g = ps.biproduct_generator(m, n, "reedy-cof", (m, n))
        A = ps.representable_simplicial(m, m)
        B = ps.representable_cyclic(n, n)
        for j in range(m + 1):
            assert g.target.ver[j].card == [A.card[j] * (n + 1) * B.card[k] for k in range(n + 1)]
        assert g.is_injective


def test_segal_cases():
    X = ps.nerve(ps.cyclic_group_table(2), 3)
    assert segal.segal_check(X, 2).ok and segal.segal_check(X, 3).ok
    assert segal.segal_report(ps.point(3, False), 3).ok
    assert segal.two_segal_report(ps.representable_simplicial(2, 3), 3).ok
    Z = ps.cyclic_nerve(ps.cyclic_group_table(2), 4)
    assert segal.segal_report(Z, 4).ok and segal.two_segal_report(Z, 4).ok
    assert segal.cyclic_segal_check(ps.point(3), 3).ok
    assert segal.cyclic_segal_check(ps.cyclic_nerve([[0]], 3), 3).ok


def test_reedy_cases():
    assert reedy.classify(cyclic.tau(3)) is reedy.ReedyClass.ISO
    assert reedy.classify(cyclic.face(2, 1)) is reedy.ReedyClass.PLUS
    phi = cyclic.make_cyclic_map(1, 1, [0, 0])
    assert reedy.classify(phi) is reedy.ReedyClass.NEITHER
    plus, minus = reedy.reedy_factor(phi)
    assert minus == cyclic.degeneracy(0, 0) and plus.src == 0 and plus.tgt == 1
    assert reedy.reedy_factor(cyclic.face(2, 0)) == (cyclic.face(2, 0), cyclic.identity(1))


def test_minus_isotropy():
    for f in cyclic.enumerate_hom(2, 1):
        if reedy.is_minus(f):
            fixers = [g for g in cyclic.automorphisms(2) if cyclic.compose_cyclic(f, g) == f]
            assert fixers == [cyclic.identity(2)]


def test_latching_of_point():
    # at n = 1 the diagram is two vertex inclusions with no arrows between them
    assert reedy.latching(ps.point(3), 1).gset.card == 2
    assert [reedy.latching(ps.point(3), n).gset.card for n in (2, 3)] == [1, 1]


def test_relative_cases():
    X = ps.cyclic_nerve(ps.cyclic_group_table(2), 2)
    for n in range(3):
        rm = reedy.relative_matching(ps.identity_map(X), n)
        assert rm.is_injective and rm.is_surjective
        rl = reedy.relative_latching(ps.initial_map(X), n)
        L = reedy.latching(X, n)
        assert rl.source.card == L.gset.card


def test_generator_families():
    for n in range(4):
        b = reedy.cset_generators(n, 3)
        assert b.is_injective and b.target.card[0] > 0
    h = reedy.cset_acyclic_generators(1, 0, 2)
    b = reedy.cset_generators(1, 2)
    for lvl in range(3):
        assert set(h.levels[lvl]) <= set(b.levels[lvl])


def test_square_counts():
    P = ps.point(2)
    assert len(lifting.enumerate_squares(ps.identity_map(P), ps.identity_map(P))) == 1
    X = ps.cyclic_nerve(ps.cyclic_group_table(2), 2)
    sq = lifting.enumerate_squares(ps.boundary_faces(0, 2), ps.terminal_map(X))
    assert len(sq) == 1
    assert sum(1 for h in ps.iter_maps(sq[0].i.target, X) if sq[0].is_lift(h)) == X.card[0]


def test_iso_cases():
    X = ps.cyclic_nerve(ps.cyclic_group_table(2), 2)
    for i in (ps.boundary_faces(1, 2), ps.cyclic_horn(2, 1, 2)):
        assert lifting.has_rlp(ps.identity_map(X), i).holds
    R = ps.representable_cyclic(0, 2)
    assert lifting.has_rlp(ps.terminal_map(R), ps.identity_map(ps.representable_cyclic(1, 2))).holds


def test_lambda0_over_point():
    p = ps.terminal_map(ps.representable_cyclic(0, 2))
    assert lifting.has_rlp(p, reedy.cset_generators(1, 2)).holds
    p3 = ps.terminal_map(ps.representable_cyclic(0, 3))
    fib, acyc = lifting.is_fibration_up_to(p3, 2), lifting.is_acyclic_fibration_up_to(p3, 2)
    assert not fib.holds and not acyc.holds
    assert acyc.witness["generator"] == "boundary(2)"
    assert lifting.is_fibration_up_to(ps.identity_map(ps.point(3)), 2).holds
