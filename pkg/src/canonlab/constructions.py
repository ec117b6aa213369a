"""Geometric constructions: Pfaffian surfaces, scrolls, Veronese surfaces,
complete-intersection and residual canonical curves, and the dimension
bookkeeping for the relevant Hilbert-scheme components."""
from __future__ import annotations

from itertools import combinations
from math import comb

from . import linalg
from .fields import QQ
from .groebner import Ideal, ideal_membership, intersect, saturate
from .invariants import hilbert_function, initial_ideal, tangent_dim
from .petri import PetriSystemG6, petri_g6_from_quadrics, surface_quadrics
from .rings import GREVLEX, Polynomial, PolynomialRing, canonical_ring


# ---------------------------------------------------------------------------
# Pfaffian surfaces and complete intersections

def pfaffian_ideal(A) -> Ideal:
    """Ideal of the five signed principal 4x4 Pfaffians of a 5x5
    skew-symmetric matrix of linear forms."""
    if len(A) != 5 or any(len(row) != 5 for row in A):
        raise ValueError("matrix must be 5x5")
    ring = None
    for i in range(5):
        for j in range(5):
            e = A[i][j]
            ring = ring or e.ring
            if e and e.degree() != 1:
                raise ValueError("entries must be linear forms")
            if not (A[i][j] + A[j][i]).is_zero():
                raise ValueError("matrix is not skew-symmetric")
    gens = []
    for i in range(5):
        idx = [r for r in range(5) if r != i]
        m = lambda a, b: A[idx[a]][idx[b]]
        pf = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2)
        if i % 2 == 1:
            pf = -pf
        if not pf.is_zero():
            gens.append(pf)
    return Ideal(ring, gens)


def complete_intersection_curve_g6(A, Q: Polynomial) -> Ideal:
    """Pfaffian surface cut by one further quadric."""
    S = pfaffian_ideal(A)
    if Q.is_zero() or Q.degree() != 2:
        raise ValueError("cutting form must be a quadric")
    if ideal_membership(Q, S):
        raise ValueError("quadric lies in the surface ideal")
    return S + (Q,)


def complete_intersection_curve_g5(q1, q2, q3) -> Ideal:
    return Ideal(q1.ring, (q1, q2, q3))


# ---------------------------------------------------------------------------
# scroll / Veronese models

def cubic_scroll_surface(ring=None) -> Ideal:
    """Rational normal cubic scroll in P^4: minors of [[x1,x2,x4],[x2,x3,x0]]."""
    ring = ring or canonical_ring(5)
    x = {n: ring.variable(n) for n in ring.variables}
    rows = ((x["x1"], x["x2"], x["x4"]), (x["x2"], x["x3"], x["x0"]))
    gens = [rows[0][a] * rows[1][b] - rows[0][b] * rows[1][a]
            for a, b in combinations(range(3), 2)]
    return Ideal(ring, gens)


def cubic_scroll_ruling_line(ring=None) -> Ideal:
    ring = ring or canonical_ring(5)
    return Ideal(ring, (ring.variable("x2"), ring.variable("x3"), ring.variable("x0")))


def quartic_scroll_surface(ring=None) -> Ideal:
    """Quartic scroll in P^5: minors of [[x1,x2,x4,x5],[x2,x3,x5,x0]]."""
    ring = ring or canonical_ring(6)
    x = {n: ring.variable(n) for n in ring.variables}
    rows = ((x["x1"], x["x2"], x["x4"], x["x5"]), (x["x2"], x["x3"], x["x5"], x["x0"]))
    gens = [rows[0][a] * rows[1][b] - rows[0][b] * rows[1][a]
            for a, b in combinations(range(4), 2)]
    return Ideal(ring, gens)


def quartic_scroll_ruling_lines(ring=None):
    ring = ring or canonical_ring(6)
    v = ring.variable
    return (Ideal(ring, (v("x2"), v("x3"), v("x5"), v("x0"))),
            Ideal(ring, (v("x1"), v("x2"), v("x4"), v("x5"))))


def veronese_surface(ring=None) -> Ideal:
    """Veronese surface in P^5: 2x2 minors of the symmetric catalecticant."""
    ring = ring or canonical_ring(6)
    x = {n: ring.variable(n) for n in ring.variables}
    sym = ((x["x1"], x["x2"], x["x3"]),
           (x["x2"], x["x4"], x["x5"]),
           (x["x3"], x["x5"], x["x0"]))
    gens = []
    for r1, r2 in combinations(range(3), 2):
        for c1, c2 in combinations(range(3), 2):
            gens.append(sym[r1][c1] * sym[r2][c2] - sym[r1][c2] * sym[r2][c1])
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# residual curves

def residual_curve(surface: Ideal, cubic: Polynomial, lines) -> Ideal:
    """Residual of the fixed lines in the intersection of the surface with
    a cubic through them: saturate(surface + cubic, intersection of lines)."""
    if isinstance(lines, Ideal):
        lines = [lines]
    if cubic.is_zero() or cubic.degree() != 3:
        raise ValueError("cutting form must be a cubic")
    if ideal_membership(cubic, surface):
        raise ValueError("cubic lies in the surface ideal")
    lines_ideal = None
    for L in lines:
        if not ideal_membership(cubic, L):
            raise ValueError("cubic does not contain every prescribed line")
        lines_ideal = L if lines_ideal is None else intersect(lines_ideal, L)
    return saturate(surface + (cubic,), lines_ideal)


def random_cubic_through(lines, rng, avoid: Ideal = None) -> Polynomial:
    """Random cubic in the intersection of the line ideals, not in `avoid`."""
    if isinstance(lines, Ideal):
        lines = [lines]
    base = None
    for L in lines:
        base = L if base is None else intersect(base, L)
    ring = base.ring
    for _ in range(50):
        c = ring.zero()
        for g in base.generators:
            mult_deg = 3 - g.degree()
            if mult_deg < 0:
                continue
            c = c + random_form(ring, mult_deg, rng) * g
        if c.is_zero() or c.degree() != 3:
            continue
        if avoid is not None and ideal_membership(c, avoid):
            continue
        return c
    raise RuntimeError("failed to draw an admissible cubic")


def random_form(ring, degree, rng) -> Polynomial:
    coeffs = {m: ring.field.random_element(rng) for m in ring.monomials_of_degree(degree)}
    return Polynomial.from_dict(ring, GREVLEX, coeffs)


def random_linear_form(ring, rng) -> Polynomial:
    return random_form(ring, 1, rng)


def random_skew_matrix(ring, rng):
    A = [[ring.zero() for _ in range(5)] for _ in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            l = random_linear_form(ring, rng)
            A[i][j] = l
            A[j][i] = -l
    return A


# ---------------------------------------------------------------------------
# the all-rho-zero family through the coordinate frame

def veronese_all_rho_zero(field, plane_points):
    """Petri system of a Veronese surface through the six coordinate points.

    The six plane points map to e_1..e_4, e_5, e_0 under the conic system;
    each coordinate pulls back to the conic through the other five points.
    The resulting quadric basis is automatically in all-rho-zero shape with
    q_ij = b_ij x0 x5 (eq-style normalisation), which is validated.
    """
    if len(plane_points) != 6:
        raise ValueError("need six plane points")
    plane = PolynomialRing(("u1", "u2", "u3"), field)
    conic_monos = sorted(plane.monomials_of_degree(2))
    quartic_monos = sorted(plane.monomials_of_degree(4))

    def eval_mono(m, pt):
        v = field.one
        for x, e in zip(pt, m):
            for _ in range(e):
                v = field.mul(v, field.normalize(x))
        return v

    conics = []
    for s in range(6):
        others = [p for t, p in enumerate(plane_points) if t != s]
        rows = []
        for pt in others:
            row = {m: eval_mono(m, pt) for m in conic_monos}
            rows.append({k: v for k, v in row.items() if not field.is_zero(v)})
        kernel = linalg.nullspace(rows, conic_monos, field)
        if len(kernel) != 1:
            raise ValueError("plane points are degenerate (no unique conic)")
        conics.append(Polynomial.from_dict(plane, GREVLEX, kernel[0]))

    # kernel of Sym^2(conics) -> quartics
    pair_keys = [(s, t) for s in range(6) for t in range(s, 6)]
    prods = {key: conics[key[0]] * conics[key[1]] for key in pair_keys}
    rows = []
    for mu in quartic_monos:
        row = {}
        for key in pair_keys:
            c = prods[key].coefficient(mu)
            if not field.is_zero(c):
                row[key] = c
        if row:
            rows.append(row)
    kernel = linalg.nullspace(rows, pair_keys, field)
    if len(kernel) != 6:
        raise ValueError("plane points are degenerate (wrong relation count)")

    # echelonise so vector (i,j) has unit coefficient on x_i x_j, zero on others
    targets = [(i - 1, j - 1) for (i, j) in PetriSystemG6.PAIRS]
    vecs = [dict(v) for v in kernel]
    basis = {}
    remaining = list(vecs)
    for tkey in targets:
        pivot = next((v for v in remaining if not field.is_zero(v.get(tkey, field.zero))), None)
        if pivot is None:
            raise ValueError("relation space misses a coordinate product")
        remaining.remove(pivot)
        inv = field.inv(pivot[tkey])
        pivot = {k: field.mul(inv, val) for k, val in pivot.items()}
        for other in list(basis.values()) + remaining:
            c = other.get(tkey)
            if c is not None and not field.is_zero(c):
                for k, val in pivot.items():
                    acc = field.sub(other.get(k, field.zero), field.mul(c, val))
                    if field.is_zero(acc):
                        other.pop(k, None)
                    else:
                        other[k] = acc
        basis[tkey] = pivot

    ring = canonical_ring(6, field)
    # coordinate s=0..5 corresponds to variables x1..x4, x5, x0
    var_index = [ring.index("x1"), ring.index("x2"), ring.index("x3"),
                 ring.index("x4"), ring.index("x5"), ring.index("x0")]
    quads = {}
    for (i, j) in PetriSystemG6.PAIRS:
        coeffs = {}
        for (s, t), c in basis[(i - 1, j - 1)].items():
            e = [0] * ring.nvars
            e[var_index[s]] += 1
            e[var_index[t]] += 1
            coeffs[tuple(e)] = c
        quads[(i, j)] = Polynomial.from_dict(ring, GREVLEX, coeffs)
    system = petri_g6_from_quadrics(quads, field)
    if any(not field.is_zero(v) for v in system.rho_map.values()):
        raise ValueError("extracted system has a nonzero rho")
    return system


# ---------------------------------------------------------------------------
# dimension bookkeeping

def dimension_ledger(genus: int) -> dict:
    """Hilbert-scheme dimension counts, each computed from its formula.

    The tangent-space entries (18, 29, 27) come from actual tangent
    computations at the standard degenerate surfaces.
    """
    if genus == 5:
        ring = canonical_ring(5)
        v = ring.variable
        s0 = Ideal(ring, (v("x1") * v("x2"), v("x1") * v("x3"), v("x2") * v("x3")))
        scroll_hilb = tangent_dim(s0)
        dim_cubics_on_line = comb(1 + 3, 3)
        dim_i3 = comb(3 + 4, 4) - hilbert_function(initial_ideal(s0), 3)
        cubics_through_line = comb(4 + 3, 3) - dim_cubics_on_line - dim_i3 - 1
        h5_prime = 3 * (comb(4 + 2, 2) - 3)
        return {
            "smooth_component_dim": 3 * genus - 3 + genus ** 2 - 1,
            "H5_prime": h5_prime,
            "scroll_hilb": scroll_hilb,
            "cubics_through_line": cubics_through_line,
            "H5_doubleprime": scroll_hilb + cubics_through_line,
        }
    if genus == 6:
        example_system = PetriSystemG6(
            QQ,
            rho={t: 1 for t in PetriSystemG6.TRIPLES},
            alpha=("x0+x5",) * 4,
            q={p: "x0*x5" for p in PetriSystemG6.PAIRS},
        )
        _, span = surface_quadrics(example_system)
        surfaces = 6 * comb(5, 2) - 5 ** 2
        quadric_system = (comb(5 + 2, 2) - span) - 1
        scroll = quartic_scroll_surface()
        dim_i3 = comb(3 + 5, 5) - hilbert_function(initial_ideal(scroll), 3)
        cubics_two_lines = comb(5 + 3, 3) - 2 * comb(1 + 3, 3) - dim_i3 - 1
        return {
            "smooth_component_dim": 3 * genus - 3 + genus ** 2 - 1,
            "surfaces": surfaces,
            "quadric_system": quadric_system,
            "H6_prime": surfaces + quadric_system,
            "cubics_two_lines": cubics_two_lines,
            "veronese_curves": comb(5 + 2, 2) - 1,
            "quartic_scroll_hilb": tangent_dim(scroll),
            "veronese_hilb": tangent_dim(veronese_surface()),
        }
    raise ValueError("genus must be 5 or 6")
