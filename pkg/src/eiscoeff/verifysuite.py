"""Built-in verification suites for the CLI.

The "paper" suite re-derives the full set of worked examples the engine
ships with (pairing vectors, first-coefficient tables for SL(3)/SL(4) and
the exceptional parabolics, Whittaker identities, completed-zeta facts);
the "properties" suite runs the structural invariants on a small sample.
"""

from __future__ import annotations

import math
from fractions import Fraction as Q

from .errors import CapExceeded
from .glcoords import GLPartition, alpha_from_s, eisenstein_parameters, power_function_exponents, rho_P, z_symbols
from .hecke import borel_eigenvalue, parabolic_eigenvalue
from .parabolic import build_parabolic, unipotent_grading, wl_orbits
from .roots import build_root_system, enumerate_weyl, weyl_denominator_check
from .specfun import bessel_k, c_factor, gamma_r, zeta_star
from .symalg import Factor, FormulaExpression, LinearForm, Symbol, canonicalize, render
from .template import (
    borel_alpha_arguments,
    constant_term,
    first_coefficient,
    minimal_hecke_ratio_check,
    standard_assignment,
    to_alpha_coordinates,
    to_classical,
)
from .whittaker import TorusPoint, jacquet_sl2_closed_form, jacquet_sl2_quadrature, whittaker_padic, whittaker_sl2_arch

Check = tuple[str, bool]


def _lf(const=0, **coeffs) -> LinearForm:
    terms = {}
    for name, c in coeffs.items():
        name = name.replace("_p", "'")
        imag = name.startswith("t")
        kind = "s_variable" if name[0] in "sz" else ("classical_v" if name[0] == "v" else "spectral")
        terms[Symbol(name, kind=kind, imaginary=imag)] = c
    return LinearForm.build(const, terms)


def _inv_zeta(arg):
    return Factor("zeta_star", arg, exponent=Q(-1))


def _inv_L(arg, rep):
    return Factor("L_star", arg, rep=rep, exponent=Q(-1))


def _formula(*factors, scalar="exact"):
    return canonicalize(FormulaExpression(tuple(factors), scalar))


def _assignment(type_name, levi):
    rs = build_root_system(type_name)
    return standard_assignment(build_parabolic(rs, levi))


def _pairings(assign):
    return {rt.coords: assign.mu_pairing(rt) for rt in assign.parabolic.delta_U}


def paper_suite() -> list[Check]:
    checks: list[Check] = []
    add = lambda name, ok: checks.append((name, bool(ok)))

    # root combinatorics of the running examples
    rs2 = build_root_system("A2")
    add("A2 positive roots {a1, a2, a1+a2}", {r.coords for r in rs2.positive_roots} == {(1, 0), (0, 1), (1, 1)})
    add("E8 has 120 positive roots", len(build_root_system("E8").positive_roots) == 120)
    try:
        enumerate_weyl(build_root_system("E8"), cap=10**6)
        add("E8 Weyl enumeration refused at cap 1e6", False)
    except CapExceeded as exc:
        add("E8 Weyl enumeration refused at cap 1e6", exc.order == 696729600)

    # pairing vectors
    borel = _assignment("A2", set())
    add(
        "Borel SL(3) pairings (s1, s2, s1+s2)",
        [borel.mu_pairing(rt) for rt in rs2.positive_roots]
        == [_lf(0, s1=1), _lf(0, s2=1), _lf(0, s1=1, s2=1)],
    )
    a21 = _assignment("A2", {1})
    add(
        "(2,1) pairings (s-it, s+it)",
        _pairings(a21) == {(0, 1): _lf(0, s=1, t=-1), (1, 1): _lf(0, s=1, t=1)},
    )
    a22 = _assignment("A3", {1, 3})
    add(
        "(2,2) pairings s±it'±it''",
        _pairings(a22)
        == {
            (0, 1, 0): _lf(0, **{"s": 1, "t'": -1, "t''": -1}),
            (1, 1, 0): _lf(0, **{"s": 1, "t'": 1, "t''": -1}),
            (0, 1, 1): _lf(0, **{"s": 1, "t'": -1, "t''": 1}),
            (1, 1, 1): _lf(0, **{"s": 1, "t'": 1, "t''": 1}),
        },
    )
    a211 = _assignment("A3", {1})
    add(
        "(2,1,1) pairings",
        _pairings(a211)
        == {
            (0, 1, 0): _lf(0, s2=1, t=-1),
            (1, 1, 0): _lf(0, s2=1, t=1),
            (0, 0, 1): _lf(0, s3=1),
            (0, 1, 1): _lf(0, s2=1, s3=1, t=-1),
            (1, 1, 1): _lf(0, s2=1, s3=1, t=1),
        },
    )
    a31 = _assignment("A3", {1, 2})
    add(
        "(3,1) pairings with t2 = -t1-t3 applied",
        _pairings(a31)
        == {
            (0, 0, 1): _lf(0, s=1, t3=1),
            (0, 1, 1): _lf(0, s=1, t1=-1, t3=-1),
            (1, 1, 1): _lf(0, s=1, t1=1),
        },
    )

    # first-coefficient formulas
    borel_alpha = to_alpha_coordinates(first_coefficient(borel, mode="flat"), 3)
    add(
        "SL(3) Borel first coefficient (three zeta* factors)",
        borel_alpha == _formula(*(_inv_zeta(a) for a in borel_alpha_arguments(3))),
    )
    add(
        "SL(3) Borel latex rendering",
        render(borel_alpha, "latex")
        == r"\left(\zeta^*(1+\alpha_1-\alpha_2)\zeta^*(1+\alpha_2-\alpha_3)"
        r"\zeta^*(1+\alpha_1-\alpha_3)\right)^{-1}",
    )
    add(
        "SL(3) maximal parabolic grouped L*(s+1, pi)",
        first_coefficient(a21) == _formula(_inv_L(_lf(1, s=1), "π")),
    )
    cl21 = to_classical(first_coefficient(a21), a21, GLPartition((2, 1)))
    add(
        "SL(3) (2,1) classical grouped L*(1+3z1, phi)",
        cl21 == _formula(_inv_L(_lf(1, z1=3), "φ"), scalar="up_to_nonzero_constant"),
    )
    cl21_flat = to_classical(first_coefficient(a21, mode="flat"), a21, GLPartition((2, 1)))
    add(
        "SL(3) (2,1) classical flat arguments {1+3z1±v}",
        {f.argument for f in cl21_flat.factors} == {_lf(1, z1=3, v=1), _lf(1, z1=3, v=-1)},
    )
    pet = first_coefficient(a21, normalization="petersson")
    add(
        "petersson appends L*(1, Ad)^(-1/2)",
        pet.scalar == "up_to_nonzero_constant"
        and any(f.kind == "norm_symbol" and f.exponent == Q(-1, 2) for f in pet.factors),
    )

    # SL(4) table in root-system coordinates
    add(
        "SL(4) Borel grouped: six zeta* factors",
        to_alpha_coordinates(first_coefficient(_assignment("A3", set())), 4)
        == _formula(*(_inv_zeta(a) for a in borel_alpha_arguments(4))),
    )
    add(
        "SL(4) (2,1,1) grouped",
        first_coefficient(a211)
        == _formula(
            _inv_L(_lf(1, s2=1), "π"), _inv_L(_lf(1, s2=1, s3=1), "π"), _inv_zeta(_lf(1, s3=1))
        ),
    )
    add(
        "SL(4) (2,2) grouped",
        first_coefficient(a22) == _formula(_inv_L(_lf(1, s=1), "π'×π''")),
    )
    add(
        "SL(4) (3,1) grouped",
        first_coefficient(a31) == _formula(_inv_L(_lf(1, s=1), "π")),
    )

    # SL(4) Hecke eigenvalue shapes (numeric spot checks at m = p)
    p = 7
    t = 0.37 + 0.81j
    lam_phi = lambda c: 1.0 if c == 1 else (2.0 * math.cos(1.1) if c == p else 0.0)
    z1, z2 = 0.21 + 0.4j, -0.05 + 0.13j
    got = parabolic_eigenvalue(GLPartition((2, 1, 1)), (z1, z2, -2 * z1 - z2), p, (lam_phi, lambda c: 1.0, lambda c: 1.0))
    expect = lam_phi(p) * p**z1 + p**z2 + p ** (-2 * z1 - z2)
    add("SL(4) (2,1,1) Hecke eigenvalue shape at m=p", abs(got - expect) < 1e-10 * abs(expect))
    got22 = parabolic_eigenvalue(GLPartition((2, 2)), (z1, -z1), p, (lam_phi, lam_phi))
    expect22 = lam_phi(p) * (p**z1 + p**-z1)
    add("SL(4) (2,2) Hecke eigenvalue shape at m=p", abs(got22 - expect22) < 1e-10 * abs(expect22))
    alpha = (t, -0.5 * t, 0.25 * t, t * (-0.75))
    add(
        "SL(4) Borel Hecke eigenvalue at m=p",
        abs(borel_eigenvalue(4, alpha, p) - sum(p**a for a in alpha)) < 1e-10,
    )
    add(
        "Hecke multiplicativity lambda(6) = lambda(2)lambda(3)",
        abs(
            borel_eigenvalue(3, (t, -t / 3, -2 * t / 3), 6)
            - borel_eigenvalue(3, (t, -t / 3, -2 * t / 3), 2)
            * borel_eigenvalue(3, (t, -t / 3, -2 * t / 3), 3)
        )
        < 1e-10,
    )

    # exceptional examples
    e8 = build_root_system("E8")
    pe7 = build_parabolic(e8, set(range(1, 8)))
    add("E8/E7 orbit sizes {56, 1}", sorted(len(o.roots) for o in wl_orbits(pe7).orbits) == [1, 56])
    add(
        "E8/E7 grading levels {1: 56, 2: 1}",
        {j: len(v) for j, v in unipotent_grading(pe7).items()} == {1: 56, 2: 1},
    )
    add(
        "E8/E7 formula L*(s+1, pi, 56) zeta*(2s+1)",
        first_coefficient(standard_assignment(pe7))
        == _formula(_inv_L(_lf(1, s=1), "π,56"), _inv_zeta(_lf(1, s=2))),
    )
    pd7 = build_parabolic(e8, set(range(2, 9)))
    add("E8/D7 orbit sizes {64, 14}", sorted(len(o.roots) for o in wl_orbits(pd7).orbits) == [14, 64])
    add(
        "E8/D7 formula L*(s+1, pi, Spin) L*(2s+1, pi, Stan)",
        first_coefficient(standard_assignment(pd7))
        == _formula(_inv_L(_lf(1, s=1), "π,Spin"), _inv_L(_lf(1, s=2), "π,Stan")),
    )

    # GL coordinate layer
    v1, v2, v3 = (_lf(0, **{f"v{i}": 1}) for i in (1, 2, 3))
    params3 = alpha_from_s(3, (v1 + Q(1, 3), v2 + Q(1, 3)))
    add(
        "SL(3) Langlands parameters (2v1+v2, -v1+v2, -v1-2v2)",
        params3.alpha == (2 * v1 + v2, -1 * v1 + v2, -1 * v1 - 2 * v2),
    )
    params4 = alpha_from_s(4, (v1 + Q(1, 4), v2 + Q(1, 4), v3 + Q(1, 4)))
    add(
        "SL(4) Langlands parameters",
        params4.alpha
        == (
            3 * v1 + 2 * v2 + v3,
            -1 * v1 + 2 * v2 + v3,
            -1 * v1 - 2 * v2 + v3,
            -1 * v1 - 2 * v2 - 3 * v3,
        ),
    )
    add("rho_P(2,1) = (1/2, -1)", rho_P(GLPartition((2, 1))) == (Q(1, 2), Q(-1)))
    part21 = GLPartition((2, 1))
    z = z_symbols(part21)
    s_gl = tuple(zi + ri for zi, ri in zip(z, rho_P(part21)))
    v = _lf(0, v=1)
    from .glcoords import GLParameters

    ep = eisenstein_parameters(part21, s_gl, (GLParameters(2, (v, -1 * v)), None))
    zz1 = _lf(0, z1=1)
    add("(2,1) Eisenstein parameters (z1+v, z1-v, -2z1)", ep.alpha == (zz1 + v, zz1 - v, -2 * zz1))
    part22 = GLPartition((2, 2))
    z = z_symbols(part22)
    s_gl = tuple(zi + ri for zi, ri in zip(z, rho_P(part22)))
    vp = _lf(0, **{"v'": 1})
    ep22 = eisenstein_parameters(
        part22, s_gl, (GLParameters(2, (v, -1 * v)), GLParameters(2, (vp, -1 * vp)))
    )
    add(
        "(2,2) Eisenstein parameters (z1+v, z1-v, -z1+v', -z1-v')",
        ep22.alpha == (zz1 + v, zz1 - v, -1 * zz1 + vp, -1 * zz1 - vp),
    )
    a1f, a2f = _lf(0, a1=1), _lf(0, a2=1)
    gl3 = GLParameters(3, (a1f, a2f, -1 * a1f - a2f))
    exps = power_function_exponents(3, gl3)
    add(
        "GL(3) power function exponents (1-alpha3, 1+alpha1)",
        exps == (a1f + a2f + 1, a1f + 1),
    )

    # cancellation identity behind the template
    configs = [
        ("A2", set()), ("A2", {1}), ("A2", {2}), ("A3", {1}), ("A3", {1, 3}),
        ("A3", {1, 2}), ("A4", {1, 2, 4}), ("A4", {2, 3}), ("D4", {1, 3, 4}), ("D4", {2}),
    ]
    add(
        "Levi cancellation identity on 10 parabolic configurations",
        all(minimal_hecke_ratio_check(_assignment(t, s)) for t, s in configs),
    )

    # constant term
    rs1 = build_root_system("A1")
    nu = Symbol("nu")
    ct1 = constant_term(rs1, (LinearForm.build(0, {nu: 2}),))
    by_len = {t.weyl.length: t for t in ct1.terms}
    add(
        "A1 constant term {e: 1, s1: c(2nu)}",
        len(ct1.terms) == 2
        and by_len[0].coefficient.factors == ()
        and [f.argument for f in by_len[1].coefficient.factors] == [LinearForm.build(0, {nu: 2})],
    )
    n1, n2 = Symbol("nu1"), Symbol("nu2")
    lam2 = (LinearForm.build(0, {n1: 2, n2: -1}), LinearForm.build(0, {n2: 2, n1: -1}))
    ct2 = constant_term(rs2, lam2)
    wlong = [t for t in ct2.terms if t.weyl.length == 3]
    add(
        "A2 constant term: 6 terms, w_long has 3 c-factors",
        len(ct2.terms) == 6 and len(wlong) == 1 and len(wlong[0].coefficient.factors) == 3,
    )

    # special-function facts
    add("zeta*(2) = pi/6", abs(zeta_star(2).value - math.pi / 6) < 1e-12)
    w = complex(0.3, 2.0)
    add("zeta*(w) = zeta*(1-w)", abs(zeta_star(w).value - zeta_star(1 - w).value) < 1e-10)
    add("Gamma_R(1) = 1", abs(gamma_r(1).value - 1) < 1e-13)
    s = complex(0.7, 0.3)
    add("c(s) c(-s) = 1", abs(c_factor(s).value * c_factor(-s).value - 1) < 1e-10)
    add(
        "K_nu = K_(-nu)",
        abs(bessel_k(0.7j, 2.0).value - bessel_k(-0.7j, 2.0).value) < 1e-12,
    )

    # Whittaker identities
    lamA2 = (0.11 + 0.83j, -0.07 + 1.21j)
    e = TorusPoint.from_coweights(rs2, [0, 0])
    add(
        "W_p(e) = 1",
        abs(whittaker_padic(3, lamA2, e, rs2).value.value - 1) < 1e-10,
    )
    a = TorusPoint.from_coweights(rs2, [1, 2])
    base = whittaker_padic(5, lamA2, a, rs2).value.value
    add(
        "W_p Weyl invariance",
        all(
            abs(whittaker_padic(5, wl.apply_weight_numeric(lamA2), a, rs2).value.value - base)
            < 1e-10 * max(1.0, abs(base))
            for wl in enumerate_weyl(rs2, 100)
        ),
    )
    nd = TorusPoint.from_coweights(rs2, [1, -1])
    add("W_p vanishes off the dominant cone", whittaker_padic(3, lamA2, nd, rs2).value.value == 0)
    nu_c = 0.23 + 0.071j
    geo_ok = True
    for k in range(11):
        got = whittaker_padic(5, (2 * nu_c,), TorusPoint.from_coweights(rs1, [k]), rs1).value.value
        oracle = 5 ** (-k / 2) * sum(5 ** (nu_c * (k - 2 * j)) for j in range(k + 1))
        geo_ok = geo_ok and abs(got - oracle) < 1e-10 * abs(oracle)
    add("GL(2) geometric-sum oracle, k <= 10", geo_ok)
    arch = whittaker_sl2_arch(0.4 + 0.1j, 1.3).value.value
    arch_m = whittaker_sl2_arch(-0.4 - 0.1j, 1.3).value.value
    add("archimedean nu <-> -nu invariance", abs(arch - arch_m) < 1e-11 * abs(arch))
    jac = jacquet_sl2_quadrature(0.3, 1.0).value.value
    add(
        "Jacquet quadrature matches the closed form",
        abs(jac - jacquet_sl2_closed_form(0.3, 1.0).value) < 1e-6,
    )
    add(
        "Gamma_R(2nu+1) times Jacquet equals the canonical value",
        abs(jac * gamma_r(1.6).value - whittaker_sl2_arch(0.3, 1.0).value.value) < 1e-6,
    )
    y = 5.0
    add(
        "large-y asymptotics e^(-2 pi y)",
        abs(whittaker_sl2_arch(0.25j, y).value.value / math.exp(-2 * math.pi * y) - 1) < 0.02,
    )

    # Weyl denominator identity
    for name in ("A2", "A3"):
        lhs, rhs = weyl_denominator_check(build_root_system(name), Q(1, 10))
        add(f"Weyl denominator identity for {name}", abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs)))

    return checks


def property_suite() -> list[Check]:
    import random

    checks: list[Check] = []
    add = lambda name, ok: checks.append((name, bool(ok)))

    for name in ("A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"):
        rs = build_root_system(name)
        total = [0] * rs.rank
        for rt in rs.positive_roots:
            for i, c in enumerate(rt.coords):
                total[i] += c
        wcoords = [sum(total[k] * rs.cartan[k][j] for k in range(rs.rank)) for j in range(rs.rank)]
        dual = all(
            rs.pairing_root_coroot(a, b) == (2 if i == j else rs.cartan[i][j])
            for i, a in enumerate(rs.simple_roots)
            for j, b in enumerate(rs.simple_roots)
        )
        add(f"{name}: sum of positive roots = 2 rho; coroot duality", wcoords == [2] * rs.rank and dual)

    rng = random.Random(2024)
    fe_ok = True
    for _ in range(20):
        w = complex(0.5 + rng.uniform(-3, 3), rng.uniform(-30, 30))
        if min(abs(w), abs(w - 1)) < 0.05:
            continue
        fe_ok = fe_ok and abs(zeta_star(w).value - zeta_star(1 - w).value) <= 1e-9 * max(
            1.0, abs(zeta_star(w).value)
        )
    add("zeta* functional equation on random strip points", fe_ok)

    cc_ok = True
    for _ in range(20):
        s = complex(rng.uniform(-2, 2), rng.uniform(-20, 20))
        if min(abs(s), abs(s - 1), abs(s + 1)) < 0.1:
            continue
        cc_ok = cc_ok and abs(c_factor(s).value * c_factor(-s).value - 1) <= 1e-9
    add("c(s) c(-s) = 1 on random points", cc_ok)

    flats = []
    for t, s in (("A2", {1}), ("A3", {1}), ("A3", {1, 3}), ("D4", {1, 3, 4})):
        assign = _assignment(t, s)
        flat = first_coefficient(assign, mode="flat")
        expanded = []
        for orbit in wl_orbits(assign.parabolic).orbits:
            expanded.extend(assign.mu_pairing(rt) + 1 for rt in orbit.roots)
        flats.append(
            sorted((f.argument for f in flat.factors), key=lambda a: a.sort_key())
            == sorted(expanded, key=lambda a: a.sort_key())
        )
    add("grouped factors expand to the flat multiset", all(flats))

    lhs, rhs = weyl_denominator_check(build_root_system("A4"), Q(1, 100))
    add("Weyl denominator identity for A4", abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs)))
    return checks
