"""Pfaffian surfaces, complete intersections, residual curves, the
all-rho-zero family and the dimension bookkeeping."""
import random

import pytest

import canonlab as cl

FP = cl.GF(cl.DEFAULT_PRIME)


def test_pfaffian_generic_surface(fp_pfaffian_surface):
    hd = cl.hilbert_data(fp_pfaffian_surface)
    assert (hd.proj_dimension, hd.degree) == (2, 5)
    bd = cl.betti_diagram(fp_pfaffian_surface)
    assert bd == cl.BettiDiagram.from_rows([[1, 0, 0, 0], [0, 5, 5, 0], [0, 0, 0, 1]])
    assert bd.is_self_dual()


def test_pfaffian_cyclic_matrix():
    # entries a_{i,i+1 mod 5} = x_i give a degree-5 surface
    ring = cl.canonical_ring(6)
    A = [[ring.zero() for _ in range(5)] for _ in range(5)]
    for i in range(5):
        j = (i + 1) % 5
        l = ring.variable(i)
        A[i][j] = A[i][j] + l
        A[j][i] = A[j][i] - l
    S = cl.pfaffian_ideal(A)
    hd = cl.hilbert_data(S)
    assert (hd.proj_dimension, hd.degree) == (2, 5)


def test_pfaffian_zero_matrix_degenerates_downstream():
    ring = cl.canonical_ring(6)
    A = [[ring.zero() for _ in range(5)] for _ in range(5)]
    S = cl.pfaffian_ideal(A)
    assert S.generators == ()
    with pytest.raises(ValueError):
        cl.buchberger(S)


def test_pfaffian_rejects_non_skew():
    ring = cl.canonical_ring(6)
    A = [[ring.variable("x1") for _ in range(5)] for _ in range(5)]
    with pytest.raises(ValueError, match="skew"):
        cl.pfaffian_ideal(A)


def test_complete_intersection_g6():
    ring = cl.canonical_ring(6, FP)
    rng = random.Random(77)
    A = cl.random_skew_matrix(ring, rng)
    Q = cl.random_form(ring, 2, rng)
    C = cl.complete_intersection_curve_g6(A, Q)
    hd = cl.hilbert_data(C)
    assert (hd.proj_dimension, hd.degree, hd.arithmetic_genus) == (1, 10, 6)
    assert cl.minimal_cubic_generators(C) == 0


def test_complete_intersection_rejects_member_quadric():
    ring = cl.canonical_ring(6, FP)
    rng = random.Random(78)
    A = cl.random_skew_matrix(ring, rng)
    S = cl.pfaffian_ideal(A)
    inside = S.generators[0]
    with pytest.raises(ValueError, match="surface"):
        cl.complete_intersection_curve_g6(A, inside)


def test_complete_intersection_g5(koszul_triple):
    hd = cl.hilbert_data(koszul_triple)
    assert (hd.proj_dimension, hd.degree, hd.arithmetic_genus) == (1, 8, 5)


def test_residual_curve_g6():
    ring = cl.canonical_ring(6, FP)
    S = cl.quartic_scroll_surface(ring)
    L1, L2 = cl.quartic_scroll_ruling_lines(ring)
    rng = random.Random(13)
    cubic = cl.random_cubic_through([L1, L2], rng, avoid=S)
    C = cl.residual_curve(S, cubic, [L1, L2])
    hd = cl.hilbert_data(C)
    assert (hd.proj_dimension, hd.degree, hd.arithmetic_genus) == (1, 10, 6)


def test_residual_curve_rejects_contained_cubic():
    ring = cl.canonical_ring(5, FP)
    S = cl.cubic_scroll_surface(ring)
    L = cl.cubic_scroll_ruling_line(ring)
    member = S.generators[0] * ring.variable("x2")
    with pytest.raises(ValueError, match="surface"):
        cl.residual_curve(S, member, L)


def test_veronese_all_rho_zero_rational():
    from canonlab.experiments import ALL_RHO_ZERO_PLANE_POINTS
    system = cl.veronese_all_rho_zero(cl.QQ, ALL_RHO_ZERO_PLANE_POINTS)
    assert all(cl.QQ.is_zero(v) for v in system.rho_map.values())
    assert len(system.b) == 6 and all(v != 0 for v in system.b.values())
    assert all(r.is_zero() for r in cl.petri_syzygy_residuals(system))
    quads = cl.build_g6_quadrics(system)
    I = cl.Ideal(system.ring, tuple(quads.values()))
    hd = cl.hilbert_data(I)
    assert (hd.proj_dimension, hd.degree) == (2, 4)


def test_veronese_rejects_degenerate_points():
    with pytest.raises(ValueError):
        cl.veronese_all_rho_zero(cl.QQ, [(1, 0, 0), (0, 1, 0), (1, 1, 0),
                                         (1, 2, 0), (1, 2, 3), (2, 5, 1)])


def test_dimension_ledger_values():
    g5 = cl.dimension_ledger(5)
    assert g5 == {"smooth_component_dim": 36, "H5_prime": 36, "scroll_hilb": 18,
                  "cubics_through_line": 17, "H5_doubleprime": 35}
    g6 = cl.dimension_ledger(6)
    assert g6 == {"smooth_component_dim": 50, "surfaces": 35, "quadric_system": 15,
                  "H6_prime": 50, "cubics_two_lines": 19, "veronese_curves": 20,
                  "quartic_scroll_hilb": 29, "veronese_hilb": 27}
    with pytest.raises(ValueError):
        cl.dimension_ledger(7)
