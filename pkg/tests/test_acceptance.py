"""Acceptance suite: one verdict line per criterion, every comparison exact.

All comparisons are between integers or ``Fraction`` values, so every
tolerance is zero.  Property criteria use fixed hypothesis settings
(``max_examples`` and ``derandomize``) so the run is reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from oracles import seifert_choices
from reference_values import (
    FIVE_TWO_GENERATORS,
    P333_APEXES,
    T43,
    TREFOIL_GENERATORS,
    type_ii_rows,
    type_iii_rows,
)

from crossgeo.catalog import bundled_catalog, find_record
from crossgeo.diagram import (
    is_alternating,
    is_reduced,
    pretzel_diagram,
    torus_diagram,
    writhe,
)
from crossgeo.edgepath import (
    candidate_lower_bounds,
    candidate_table,
    complete_type_i,
    enumerate_basic_systems,
    euler_characteristic,
)
from crossgeo.geography import (
    GammaPair,
    GeographyRegion,
    connected_sum_gamma,
    gamma,
    gamma3_from_region,
    gamma_invariance_under_twist,
    gl_wedge,
    normalize,
    oss_sg_bounds,
    pretzel_gap_filling,
    state_geography,
    turaev_genus_diagram,
)
from crossgeo.signature import goeritz_signature, pretzel_gap_signature, traczyk_signature
from crossgeo.states import (
    add_twisted_band,
    all_a,
    all_b,
    enumerate_states,
    resolve,
    state_surface,
)
from crossgeo.torus import pinch_surface_3, pinch_surface_4

F = Fraction
GAP_FAMILY = [(5, 1), (9, 1), (5, 3), (9, 3)]
GAP_PAIR = 3


def _pt(s):
    p = state_surface(s).point
    return (p.e, p.b1)


def _fixtures():
    return {r.name: r.diagram for r in bundled_catalog()}


def test_criterion_01_trefoil_basic_states(criterion):
    c = criterion(1, "trefoil basic states")
    d = find_record("trefoil").diagram
    every = enumerate_states(d)
    basic = [s for s in every if s.is_basic()]
    c.check("8 states, 2 basic", (len(every), len(basic)) == (8, 2), f"{len(every)}, {len(basic)}")
    got = sorted((_pt(s), state_surface(s).orientable) for s in basic)
    c.check("invariants", got == [((-6, 1), False), ((0, 2), True)], str(got))
    c.finish()


def test_criterion_02_trefoil_geography(criterion):
    c = criterion(2, "trefoil geography")
    d = find_record("trefoil").diagram
    geo = state_geography(d)
    sigma = goeritz_signature(d)
    c.check("sigma", sigma == -2, str(sigma))
    c.check(
        "apex set (generating surfaces)",
        set(geo.region.generators) == TREFOIL_GENERATORS,
        str(sorted(geo.region.generators)),
    )
    c.check("gamma_3 = 1", gamma3_from_region(geo.region) == 1)
    hat = geo.gamma_hat(sigma)
    c.check("gamma_hat_3 = (0, 0)", hat == GammaPair(0, 0), str(hat.as_tuple()))
    c.finish()


def test_criterion_03_five_two(criterion):
    c = criterion(3, "5_2 basic states and geography")
    d = find_record("5_2").diagram
    every = enumerate_states(d)
    basic = [s for s in every if s.is_basic()]
    c.check("32 states, 3 basic", (len(every), len(basic)) == (32, 3))
    got = sorted((_pt(s), state_surface(s).orientable) for s in basic)
    c.check(
        "invariants",
        got == [((0, 2), True), ((4, 2), False), ((10, 3), False)],
        str(got),
    )
    geo = state_geography(d)
    c.check(
        "generators",
        set(geo.region.generators) == FIVE_TWO_GENERATORS,
        str(sorted(geo.region.generators)),
    )
    sigma = goeritz_signature(d)
    c.check("sigma = 2", sigma == 2)
    g_a, g_b = gamma(_pt(all_a(d)), sigma), gamma(_pt(all_b(d)), sigma)
    c.check(
        "Gamma+(F_A) = 0 = Gamma-(F_B)",
        g_a.gamma_plus == 0 == g_b.gamma_minus,
        f"{g_a.gamma_plus}, {g_b.gamma_minus}",
    )
    c.finish()


def _alternating_fixtures():
    out = {n: d for n, d in _fixtures().items() if is_alternating(d) and is_reduced(d)}
    out.update(
        {
            "T(7,2)": torus_diagram(7, 2),
            "P(2,3,3)": pretzel_diagram((2, 3, 3)),
            "P(1,3,3)": pretzel_diagram((1, 3, 3)),
            "P(-1,-1,-5)": pretzel_diagram((-1, -1, -5)),
        }
    )
    return out


def test_criterion_04_alternating_identities(criterion):
    c = criterion(4, "alternating identities")
    fixtures = _alternating_fixtures()
    c.check("at least 5 fixtures", len(fixtures) >= 5, ", ".join(sorted(fixtures)))
    for name, d in sorted(fixtures.items()):
        sigma = goeritz_signature(d)
        sa, sb = all_a(d), all_b(d)
        e_a, b_a = _pt(sa)
        c.check(f"{name}: b1(F_A) = e(F_A)/2 - sigma", b_a == F(e_a, 2) - sigma)
        c.check(f"{name}: 2 = -c + |s_A| + |s_B|", 2 == -d.c + sa.n_circles + sb.n_circles)
        c.check(f"{name}: Traczyk = Goeritz", traczyk_signature(d) == sigma)
    c.finish()


def test_criterion_05_turaev_identity(criterion):
    c = criterion(5, "Turaev identity")
    fixtures = _fixtures() | _alternating_fixtures()
    for name, d in sorted(fixtures.items()):
        sigma = goeritz_signature(d)
        g_t = turaev_genus_diagram(d)
        via = (gamma(_pt(all_a(d)), sigma).gamma_plus + gamma(_pt(all_b(d)), sigma).gamma_minus) / 2
        c.check(f"{name}: g_T = {g_t}", g_t == via, f"half sum {via}")
        if is_alternating(d):
            c.check(f"{name}: alternating gives 0", g_t == 0)
    for n in (3, 5, 7):
        g_t = turaev_genus_diagram(pretzel_diagram((-3, 3, n)))
        c.check(f"P(-3,3,{n}) has g_T = 1", g_t == 1)
    c.finish()


def test_criterion_06_torus_4_3(criterion):
    c = criterion(6, "T(4,3)")
    rec = find_record("T(4,3)")
    d = torus_diagram(4, 3)
    sigma = goeritz_signature(d)
    c.check("sigma computed", sigma == T43["sigma"], str(sigma))
    f3, f4 = pinch_surface_3(4, 3), pinch_surface_4(4, 3)
    c.check("F3", f3.pair == T43["f3"], str(f3.pair))
    c.check("F4", f4.pair == T43["f4"], str(f4.pair))
    bounds = oss_sg_bounds(sigma, rec.upsilon)
    c.check("oss-sg bounds (+, -)", bounds == (0, 2), str(bounds))
    g4 = gamma(f4, sigma)
    c.check(
        "gamma_hat_4 = (0, 2): F4 meets the bounds",
        (g4.gamma_plus, g4.gamma_minus) == bounds == (0, 2),
    )
    seifert = state_surface(resolve(d, seifert_choices(d.pd))).point
    c.check("Seifert surface", seifert.pair == T43["seifert"] and seifert.orientable)
    up = GammaPair(
        gamma(add_twisted_band(seifert, "+"), sigma).gamma_plus, gamma(f3, sigma).gamma_minus
    )
    c.check("gamma_bar_3 <= 1", up == GammaPair(0, 2) and up.average == 1, str(up.as_tuple()))
    c.finish()


def test_criterion_07_torus_family(criterion):
    c = criterion(7, "T(2k,2k-1), k = 2..4")
    for k in (2, 3, 4):
        p, q = 2 * k, 2 * k - 1
        rec = find_record(f"T({p},{q})")
        sigma = goeritz_signature(torus_diagram(p, q))
        c.check(f"k={k}: sigma computed = stored", sigma == rec.sigma, str(sigma))
        f4 = pinch_surface_4(p, q)
        c.check(f"k={k}: b1(F4) = k-1", f4.b1 == k - 1)
        lo_plus, lo_minus = oss_sg_bounds(sigma, rec.upsilon)
        c.check(
            f"k={k}: as stated, gamma_hat_4- = 0 and gamma_hat_4+ = 2k-2",
            (lo_minus, lo_plus) == (0, 2 * k - 2),
            f"computed (+, -) = ({lo_plus}, {lo_minus})",
        )
        m_plus, m_minus = oss_sg_bounds(-sigma, -rec.upsilon)
        c.check(
            f"k={k}: mirror has gamma_hat_4- = 0, gamma_hat_4+ = 2k-2",
            (m_minus, m_plus) == (0, 2 * k - 2),
        )
        g4 = gamma(f4, sigma)
        c.check(
            f"k={k}: F4 meets the bounds, gamma_bar_4 = k-1",
            (g4.gamma_plus, g4.gamma_minus) == (lo_plus, lo_minus)
            and F(lo_plus + lo_minus, 2) == k - 1,
        )
    c.finish()


def test_criterion_08_pretzel_gap(criterion):
    c = criterion(8, "pretzel gap family")
    p = GAP_PAIR
    for k, r in GAP_FAMILY:
        d = pretzel_diagram((-k, r, -r - 1, p, -p))
        tag = f"(k,r)=({k},{r})"
        sigma = goeritz_signature(d)
        c.check(f"{tag}: sigma closed form", sigma == pretzel_gap_signature(k, r), str(sigma))
        (e_a, b_a), (e_b, b_b) = _pt(all_a(d)), _pt(all_b(d))
        c.check(
            f"{tag}: b1(F_A) = 2+r+p, b1(F_B) = 1+r+k+p",
            (b_a, b_b) == (2 + r + p, 1 + r + k + p),
        )
        c.check(
            f"{tag}: as stated, e(F_A) = 2k+p, e(F_B) = -4r-2-p",
            (e_a, e_b) == (2 * k + p, -4 * r - 2 - p),
            f"machinery gives ({e_a}, {e_b}) = (2k+2p, -4r-2-2p)",
        )
        big = k > r * (r + 1)
        g_a, g_b = gamma((e_a, b_a), sigma), gamma((e_b, b_b), sigma)
        c.check(
            f"{tag}: as stated, Gamma-(F_A), Gamma+(F_B) = {(0, 2) if big else (2, 0)}",
            (g_a.gamma_minus, g_b.gamma_plus) == ((0, 2) if big else (2, 0)),
            f"computed ({g_a.gamma_minus}, {g_b.gamma_plus})",
        )
        c.check(
            f"{tag}: two-case table with labels exchanged",
            (g_a.gamma_plus, g_b.gamma_minus) == ((0, 2) if big else (2, 0)),
        )
        filling = pretzel_gap_filling(k, r, (p,))
        c.check(
            f"{tag}: band-move e = 2(k-r-1) from writhes",
            filling.e == 2 * (k - r - 1) and filling.b1 == 1,
            f"e={filling.e}, b1={filling.b1}",
        )
    c.finish()


def test_criterion_09_edgepaths(criterion):
    c = criterion(9, "edgepath suite")
    for n in (3, 5, 7):
        rows = candidate_table((-3, 3, n))
        got = [(r.e, r.b1, r.gamma_plus, r.gamma_minus) for r in rows[1:]]
        c.check(f"n={n}: 16 Type II/III rows", got == type_ii_rows(n) + type_iii_rows(n))
        (lam,) = complete_type_i(enumerate_basic_systems((-3, 3, n)))
        c.check(
            f"n={n}: Type I u0, sheets, chi, e",
            lam.u0 == F(2 * n - 2, 3 * n - 1)
            and lam.sheets == (n + 1) // 2
            and euler_characteristic(lam) == -F(n + 1, 2)
            and rows[0].e == -F(8, n + 1),
        )
        lo = candidate_lower_bounds(rows)
        c.check(f"n={n}: min Gamma+ = 0, min Gamma- = 2", lo == GammaPair(0, 2), str(lo.as_tuple()))
    geo = state_geography(pretzel_diagram((-3, 3, 3)))
    apexes = set(geo.region.apex_points())
    c.check("P(-3,3,3) apexes", apexes == P333_APEXES, str(sorted(apexes)))
    c.finish()


def test_criterion_10_connected_sums(criterion):
    c = criterion(10, "connected sums of P(-3,3,3)")
    d = pretzel_diagram((-3, 3, 3))
    upper = state_geography(d).gamma_hat(goeritz_signature(d))
    lower = candidate_lower_bounds(candidate_table((-3, 3, 3)))
    c.check("gamma_hat_3(P3) = (0, 2)", upper == lower == GammaPair(0, 2))
    rec = find_record("P(-3,3,3)")
    g4 = oss_sg_bounds(rec.sigma, rec.upsilon)
    c.check("slice: gamma_hat_4 = (0, 0)", g4 == (0, 0))
    total = upper
    for n in range(1, 6):
        if n > 1:
            total = connected_sum_gamma(total, upper)
        c.check(
            f"n={n}: gamma_hat_3- = {2 * n}, gap {2 * n}",
            total.gamma_minus == 2 * n and total.gamma_minus - g4[1] == 2 * n,
        )
    c.finish()


_PROP = settings(
    max_examples=30,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)


def _run(prop) -> tuple[bool, str]:
    try:
        prop()
    except AssertionError as exc:
        return False, str(exc).splitlines()[0][:120]
    return True, ""


def test_criterion_11_properties(criterion):
    from hypothesis import strategies as st
    from test_properties import diagrams

    c = criterion(11, "property suites (<= 12 crossings)")

    def states_of(d):
        return enumerate_states(d, basic_only=d.c > 6)

    @_PROP
    @given(diagrams)
    def parity_and_wedge(d):
        w = gl_wedge(goeritz_signature(d))
        for s in states_of(d):
            e, b = _pt(s)
            assert (e - 2 * b) % 4 == 0 and w.contains(e, b)

    @_PROP
    @given(diagrams)
    def twist_invariance(d):
        sigma = goeritz_signature(d)
        for s in states_of(d):
            pt = state_surface(s).point
            g = gamma(pt, sigma)
            assert gamma_invariance_under_twist(pt, "+", sigma) == g.gamma_plus
            assert gamma_invariance_under_twist(pt, "-", sigma) == g.gamma_minus

    @_PROP
    @given(diagrams)
    def orientability(d):
        seifert = seifert_choices(d.pd)
        for s in states_of(d):
            surf = state_surface(s)
            assert surf.orientable == (s.choices == seifert)
            assert not surf.orientable or surf.point.e == 0

    @_PROP
    @given(st.lists(st.tuples(st.integers(-20, 20), st.integers(0, 10)), max_size=8))
    def normalization(points):
        pts = [(e, b) for e, b in points if (e - 2 * b) % 4 == 0]
        once = normalize(pts)
        assert normalize(w.apex for w in once) == once
        r = GeographyRegion.from_points(pts)
        assert r.normalized().normalized() == r.normalized()

    @_PROP
    @given(diagrams)
    def mirror(d):
        m = d.mirror()
        assert writhe(m) == -writhe(d)
        assert goeritz_signature(m) == -goeritz_signature(d)
        gens = set(state_geography(d).region.generators)
        assert set(state_geography(m).region.generators) == {(-e, b) for e, b in gens}

    for label, prop in [
        ("e = 2 b1 mod 4 and every state point in W_sigma", parity_and_wedge),
        ("Gamma+- invariant under twisted bands", twist_invariance),
        ("orientable iff oriented smoothing; orientable => e = 0", orientability),
        ("normalization idempotent", normalization),
        ("mirror negates writhe, sigma and geography", mirror),
    ]:
        c.check(label, *_run(prop))
    c.finish()
