"""Shared fixtures: the worked-example ideals are expensive to build, so
they are session-scoped and their Groebner/resolution caches are reused."""
import random

import pytest

import canonlab as cl


@pytest.fixture(scope="session")
def ring5():
    return cl.canonical_ring(5)


@pytest.fixture(scope="session")
def ring6():
    return cl.canonical_ring(6)


@pytest.fixture(scope="session")
def sys32():
    from canonlab.experiments import example_32_system
    return example_32_system()


@pytest.fixture(scope="session")
def quads32(sys32):
    return cl.build_g6_quadrics(sys32)


@pytest.fixture(scope="session")
def ideal32(sys32, quads32):
    return cl.Ideal(sys32.ring, tuple(quads32[p] for p in sys32.PAIRS))


@pytest.fixture(scope="session")
def surface32(sys32):
    F, _ = cl.surface_quadrics(sys32)
    return cl.Ideal(sys32.ring, F)


@pytest.fixture(scope="session")
def curve36():
    from canonlab.experiments import example_curve_components
    c1, c2 = example_curve_components("3.6")
    return cl.intersect(c1, c2)


@pytest.fixture(scope="session")
def curve37():
    from canonlab.experiments import example_curve_components
    c1, c2 = example_curve_components("3.7")
    return cl.intersect(c1, c2)


@pytest.fixture(scope="session")
def s0_p4(ring5):
    v = ring5.variable
    return cl.Ideal(ring5, (v("x1") * v("x2"), v("x1") * v("x3"), v("x2") * v("x3")))


@pytest.fixture(scope="session")
def koszul_triple(ring5):
    rng = random.Random(271828)
    quads = [cl.random_form(ring5, 2, rng) for _ in range(3)]
    return cl.Ideal(ring5, quads)


@pytest.fixture(scope="session")
def fp_pfaffian_surface():
    ring = cl.canonical_ring(6, cl.GF(cl.DEFAULT_PRIME))
    rng = random.Random(314159)
    return cl.pfaffian_ideal(cl.random_skew_matrix(ring, rng))


@pytest.fixture(scope="session")
def corpus(ring5, s0_p4, ideal32, surface32, curve36, curve37, koszul_triple,
           fp_pfaffian_surface):
    """Named homogeneous ideals the engine-wide property checks run over."""
    hyperplane = cl.Ideal(ring5, (ring5.variable("x0"),))
    m2_surface = cl.Ideal(cl.canonical_ring(6),
                          cl.fprime_basis(cl.petri_point_with_rho134_rho234_zero()))
    m1_surface = cl.Ideal(cl.canonical_ring(6),
                          cl.fprime_basis(cl.petri_point_with_rho234_zero()))
    return [
        ("degenerate_cubic_surface", s0_p4),
        ("hyperplane", hyperplane),
        ("five_conic_curve", ideal32),
        ("five_plane_surface", surface32),
        ("surface_rho234_zero", m1_surface),
        ("surface_rho134_rho234_zero", m2_surface),
        ("reducible_curve_a", curve36),
        ("reducible_curve_b", curve37),
        ("quadric_triple", koszul_triple),
        ("pfaffian_surface_fp", fp_pfaffian_surface),
    ]
