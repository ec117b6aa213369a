"""Hilbert series, Hilbert data, Betti diagrams, resolutions, tangent spaces."""
import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

import canonlab as cl
from canonlab.invariants import MonomialIdeal, hilbert_series_numerator
from canonlab.rings import mono_deg, mono_divides, mono_lcm

R5 = cl.canonical_ring(5)
R6 = cl.canonical_ring(6)


def P5(s):
    return cl.parse_poly(s, R5)


def P6(s):
    return cl.parse_poly(s, R6)


# ---------------------------------------------------------------------------
# oracle: inclusion-exclusion over generator subsets

def numerator_by_inclusion_exclusion(M: MonomialIdeal):
    coeffs = {}
    gens = M.generators
    for r in range(len(gens) + 1):
        for subset in combinations(gens, r):
            l = (0,) * M.ring.nvars
            for m in subset:
                l = mono_lcm(l, m)
            d = mono_deg(l)
            coeffs[d] = coeffs.get(d, 0) + (-1) ** r
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# Hilbert series

def test_numerator_of_full_ring():
    M = MonomialIdeal.from_monomials(R6, [])
    assert hilbert_series_numerator(M) == [1]


def test_numerator_of_three_squarefree_quadrics():
    M = MonomialIdeal.from_monomials(R5, [m for m, _ in
                                          (P5("x1*x2").terms + P5("x1*x3").terms + P5("x2*x3").terms)])
    assert hilbert_series_numerator(M) == [1, 0, -3, 2]
    assert numerator_by_inclusion_exclusion(M) == [1, 0, -3, 2]


def test_numerator_matches_inclusion_exclusion_on_corpus(corpus):
    for name, ideal in corpus:
        M = cl.initial_ideal(ideal)
        assert hilbert_series_numerator(M) == numerator_by_inclusion_exclusion(M), name


def test_hilbert_function_from_numerator(s0_p4):
    M = cl.initial_ideal(s0_p4)
    # standard monomials counted directly
    for d in range(6):
        direct = sum(1 for m in R5.monomials_of_degree(d) if not M.contains(m))
        assert cl.hilbert_function(M, d) == direct


# ---------------------------------------------------------------------------
# Hilbert data

def test_curve_hilbert_data(ideal32):
    hd = cl.hilbert_data(ideal32)
    assert (hd.proj_dimension, hd.degree, hd.arithmetic_genus) == (1, 10, 6)
    assert hd.hilbert_polynomial == (Fraction(-5), Fraction(10))


def test_surface_hilbert_data(surface32):
    hd = cl.hilbert_data(surface32)
    assert (hd.proj_dimension, hd.degree) == (2, 5)


def test_five_point_section(ideal32, surface32, sys32):
    ring = surface32.ring
    section = surface32 + (ring.variable("x0"), ring.variable("x5"))
    hd = cl.hilbert_data(section)
    assert (hd.proj_dimension, hd.degree) == (0, 5)
    points = [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
              (0, 0, 0, 1, 0, 0), (1, 1, 1, 1, 0, 0)]
    for g in surface32.generators:
        for pt in points:
            assert sys32.field.is_zero(g.evaluate(pt))


def test_hilbert_polynomial_matches_function_beyond_regularity(corpus):
    for name, ideal in corpus:
        hd = cl.hilbert_data(ideal)
        if hd.proj_dimension < 0:
            continue
        M = cl.initial_ideal(ideal)
        for d in range(6, 10):
            assert hd.hp(d) == cl.hilbert_function(M, d), name


def test_hilbert_function_linear_algebra_oracle(corpus):
    # standard-monomial count == dim R_d - rank of the generator multiples
    from canonlab import linalg
    for name, ideal in corpus:
        ring = ideal.ring
        M = cl.initial_ideal(ideal)
        for d in range(6):
            rows = []
            for g in ideal.generators:
                k = d - g.degree()
                if k < 0:
                    continue
                for m in ring.monomials_of_degree(k):
                    rows.append(dict(g.mul_term(m, ring.field.one).terms))
            rank = linalg.rank(rows, ring.field)
            total = comb(d + ring.nvars - 1, ring.nvars - 1)
            assert cl.hilbert_function(M, d) == total - rank, (name, d)


def test_empty_zero_set_reported():
    I = cl.Ideal(R5, tuple(R5.variable(i) for i in range(5)))
    hd = cl.hilbert_data(I)
    assert hd.proj_dimension == -1
    assert hd.arithmetic_genus is None


# ---------------------------------------------------------------------------
# initial ideals of the degenerate surface families

def test_initial_ideal_rho234_zero():
    system = cl.petri_point_with_rho234_zero()
    assert all(r.is_zero() for r in cl.petri_syzygy_residuals(system))
    J = cl.Ideal(system.ring, cl.fprime_basis(system))
    M = cl.initial_ideal(J)
    names = sorted(str(system.ring.monomial(m)) for m in M.generators)
    assert names == sorted(["x1*x2", "x1*x3", "x2*x3", "x2*x4", "x3*x4", "x1*x4^2"])
    hd = cl.hilbert_data(J)
    assert (hd.degree, 5 - hd.proj_dimension) == (5, 3)


def test_initial_ideal_rho134_rho234_zero():
    system = cl.petri_point_with_rho134_rho234_zero()
    assert all(r.is_zero() for r in cl.petri_syzygy_residuals(system))
    J = cl.Ideal(system.ring, cl.fprime_basis(system))
    M = cl.initial_ideal(J)
    names = sorted(str(system.ring.monomial(m)) for m in M.generators)
    assert names == sorted(["x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2*x5"])
    hd = cl.hilbert_data(J)
    assert (hd.degree, 5 - hd.proj_dimension) == (5, 3)


def test_initial_ideal_of_reducible_curve(curve36):
    names = sorted(str(R6.monomial(m)) for m in cl.initial_ideal(curve36).generators)
    assert names == sorted(["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
                            "x1^2*x5", "x2^2*x5", "x4^2*x5", "x3^3*x5"])


# ---------------------------------------------------------------------------
# Betti diagrams and resolutions

def test_surface_betti_is_gorenstein(surface32):
    bd = cl.betti_diagram(surface32)
    assert bd == cl.BettiDiagram.from_rows([[1, 0, 0, 0], [0, 5, 5, 0], [0, 0, 0, 1]])
    assert bd.is_self_dual()


def test_reducible_curve_betti(curve36, curve37):
    bd36 = cl.betti_diagram(curve36)
    assert bd36 == cl.BettiDiagram.from_rows(
        [[1, 0, 0, 0, 0], [0, 6, 6, 1, 0], [0, 1, 6, 6, 1], [0, 0, 0, 1, 1]])
    assert bd36.beta13 == 1 and not bd36.is_self_dual()
    bd37 = cl.betti_diagram(curve37)
    assert bd37 == cl.BettiDiagram.from_rows(
        [[1, 0, 0, 0, 0], [0, 6, 5, 1, 0], [0, 0, 6, 6, 1], [0, 0, 0, 1, 1]])
    assert bd37.beta13 == 0 and not bd37.is_self_dual()


def test_koszul_betti_of_quadric_triple(koszul_triple):
    bd = cl.betti_diagram(koszul_triple)
    assert bd == cl.BettiDiagram.from_rows(
        [[1, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 1]])


def test_hilbert_burch_shape(s0_p4):
    assert cl.betti_diagram(s0_p4) == cl.BettiDiagram.from_rows([[1, 0, 0], [0, 3, 2]])


def test_betti_alternating_sum_matches_numerator(corpus):
    for name, ideal in corpus:
        bd = cl.betti_diagram(ideal)
        numer = hilbert_series_numerator(cl.initial_ideal(ideal))
        for j in range(len(numer)):
            alt = sum((-1) ** i * bd.beta(i, j) for i in range(bd.max_i + 1))
            assert alt == numer[j], (name, j)
        for (i, j) in bd.entries:
            assert j < len(numer) or bd.beta(i, j) == 0


def test_resolutions_minimal_exact_homogeneous(corpus):
    for name, ideal in corpus:
        res = cl.free_resolution(ideal)
        assert res.is_minimal(), name
        assert res.compositions_are_zero(), name
        assert res.entries_are_homogeneous(), name
        assert res.length <= ideal.ring.nvars, name


def test_minimal_betti_agrees_with_tor(corpus):
    for name, ideal in corpus:
        assert cl.betti_diagram(ideal) == cl.betti_from_tor(ideal), name


def test_minimal_cubic_generator_shortcut(curve36, curve37, surface32):
    assert cl.minimal_cubic_generators(curve36) == 1
    assert cl.minimal_cubic_generators(curve37) == 0
    assert cl.minimal_cubic_generators(surface32) == 0


# ---------------------------------------------------------------------------
# tangent spaces

def test_tangent_of_degenerate_cubic_surface(s0_p4):
    assert cl.tangent_dim(s0_p4) == 18


def test_tangent_of_hyperplane():
    H = cl.Ideal(R5, (P5("x0"),))
    assert cl.tangent_dim(H) == 4


def test_tangent_of_reducible_curves(curve36, curve37):
    assert cl.tangent_dim(curve36) == 50
    assert cl.tangent_dim(curve37) == 50


def test_tangent_invariant_under_coordinate_change(s0_p4):
    rng = random.Random(23)
    for _ in range(2):
        while True:
            images = {name: cl.random_form(R5, 1, rng) for name in R5.variables}
            rows = [dict(images[name].terms) for name in R5.variables]
            from canonlab import linalg
            if linalg.rank(rows, R5.field) == 5:
                break
        moved = cl.Ideal(R5, tuple(g.substitute(images) for g in s0_p4.generators))
        assert cl.tangent_dim(moved) == 18


def test_tangent_rejects_non_saturated_input():
    # x0 * (irrelevant ideal) saturates to (x0)
    gens = tuple(P5("x0") * v for v in R5.gens())
    I = cl.Ideal(R5, gens)
    with pytest.raises(ValueError, match="saturated"):
        cl.tangent_dim(I)


def test_scroll_and_veronese_tangent_dimensions():
    assert cl.tangent_dim(cl.quartic_scroll_surface()) == 29
    assert cl.tangent_dim(cl.veronese_surface()) == 27
