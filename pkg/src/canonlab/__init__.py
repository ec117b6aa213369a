"""Exact-arithmetic Groebner toolkit for canonically embedded curves of
genus 5 and 6: Petri-form quadric systems, reduced Groebner bases, Hilbert
data, minimal free resolutions with Betti diagrams, Hilbert-scheme tangent
spaces, and the verification scenarios built on them."""

from .fields import DEFAULT_PRIME, GF, QQ, PrimeField, RationalField
from .rings import (GREVLEX, LEX, Block, GrevLex, Lex, Polynomial,
                    PolynomialRing, PolyParseError, canonical_ring,
                    compare_monomials, parse_poly)
from .groebner import (GroebnerBasis, Ideal, SyzygyVector, buchberger,
                       divide_with_quotients, eliminate, exact_div,
                       ideal_equal, ideal_membership, intersect,
                       irrelevant_ideal, is_saturated, normal_form,
                       quotient, saturate, schreyer_syzygies, spoly)
from .invariants import (BettiDiagram, FreeResolution, HilbertData,
                         MonomialIdeal, betti_diagram, betti_from_tor,
                         free_resolution, hilbert_data, hilbert_function,
                         hilbert_series_numerator, initial_ideal,
                         minimal_cubic_generators, tangent_dim)
from .petri import (NormalizationError, PetriError, PetriSystemG5,
                    PetriSystemG6, RhoGraph, build_g5_quadrics,
                    build_g6_quadrics, fprime_basis, normalize_numbering,
                    petri_g6_from_quadrics, petri_point_with_rho134_rho234_zero,
                    petri_point_with_rho234_zero, petri_syzygy_residuals,
                    recovered_cubics, renumbered, rho_graph,
                    surface_quadrics, verify_lemma_34)
from .constructions import (complete_intersection_curve_g5,
                            complete_intersection_curve_g6,
                            cubic_scroll_ruling_line, cubic_scroll_surface,
                            dimension_ledger, pfaffian_ideal,
                            quartic_scroll_ruling_lines,
                            quartic_scroll_surface, random_cubic_through,
                            random_form, random_linear_form,
                            random_skew_matrix, residual_curve,
                            veronese_all_rho_zero, veronese_surface)
from .experiments import (EXAMPLE_IDS, Check, ExperimentConfig, Report,
                          run_example, sample)

__version__ = "0.1.0"
