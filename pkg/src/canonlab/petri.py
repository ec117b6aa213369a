"""Petri-form coefficient systems for genus 5 and 6 canonical curves.

A system stores the data (rho_{ijk}, alpha_k, diagonal a_{sij}, q_{ij})
of the normalised quadric basis f_ij = x_i x_j - sum_s a_{sij} x_s - q_ij,
with a_{kij} = rho_{kij} alpha_k for k outside {i,j}.  The operations
derive the quadric families, the degree-5 surface combinations, the
rho-graph, the Petri syzygy residuals and the formal lifting identity.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .fields import QQ
from .groebner import normal_form
from .rings import GREVLEX, Polynomial, canonical_ring, parse_poly


class PetriError(ValueError):
    pass


class NormalizationError(PetriError):
    """No renumbering makes rho_123 and rho_124 nonzero; carries the graph."""

    def __init__(self, graph):
        super().__init__("no renumbering yields two nonzero rho on a common pair")
        self.graph = graph


def _coerce_form(value, ring, tail, kind):
    """Accept a Polynomial or text; enforce support in the tail variables."""
    if value is None:
        return ring.zero()
    if isinstance(value, str):
        value = parse_poly(value, ring)
    if value.ring != ring:
        raise PetriError("form belongs to a different ring")
    max_deg = 1 if kind == "linear" else 2
    for m, _ in value.terms:
        if sum(m) > max_deg:
            raise PetriError(f"{kind} form has degree > {max_deg}: {value}")
        if any(e and i not in tail for i, e in enumerate(m)):
            names = ", ".join(ring.variables[i] for i in tail)
            raise PetriError(f"{kind} form must involve only ({names}): {value}")
    return value


def _pair(i, j):
    return (i, j) if i < j else (j, i)


class PetriSystemG5:
    """Petri data for genus 5: pairs from {1,2,3}, tail variables (x4,x0)."""

    PAIRS = ((1, 2), (1, 3), (2, 3))
    INDICES = (1, 2, 3)
    genus = 5

    def __init__(self, field=QQ, rho123=0, alpha=None, a=None, q=None):
        self.field = field
        self.ring = canonical_ring(5, field)
        tail = (self.ring.index("x4"), self.ring.index("x0"))
        self.tail = tail
        self.rho123 = field.normalize(rho123)
        alpha = alpha or (None, None, None)
        self.alpha = tuple(_coerce_form(a_, self.ring, tail, "linear") for a_ in alpha)
        if len(self.alpha) != 3:
            raise PetriError("genus 5 needs 3 alpha forms")
        self.a_diag = {}
        for key, val in (a or {}).items():
            s, i, j = key
            if s not in (i, j) or _pair(i, j) not in self.PAIRS:
                raise PetriError(f"bad diagonal index {key}")
            self.a_diag[(s,) + _pair(i, j)] = _coerce_form(val, self.ring, tail, "linear")
        self.q = {}
        for key, val in (q or {}).items():
            if _pair(*key) not in self.PAIRS:
                raise PetriError(f"bad pair {key}")
            self.q[_pair(*key)] = _coerce_form(val, self.ring, tail, "quadratic")

    def rho(self, i, j, k):
        return self.rho123

    def a(self, s, i, j):
        i, j = _pair(i, j)
        if s in (i, j):
            return self.a_diag.get((s, i, j), self.ring.zero())
        if not self.field.is_zero(self.rho123):
            if self.alpha[s - 1].is_zero():
                raise PetriError(f"alpha_{s} is zero but referenced (nonzero rho)")
        return self.alpha[s - 1].scale(self.rho123)

    def q_form(self, i, j):
        return self.q.get(_pair(i, j), self.ring.zero())


class PetriSystemG6:
    """Petri data for genus 6: pairs from {1,..,4}, tail variables (x0,x5)."""

    PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    TRIPLES = ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
    INDICES = (1, 2, 3, 4)
    genus = 6

    def __init__(self, field=QQ, rho=None, alpha=None, a_diag=None, q=None, b=None):
        self.field = field
        self.ring = canonical_ring(6, field)
        tail = (self.ring.index("x5"), self.ring.index("x0"))
        self.tail = tail
        self.rho_map = {t: field.zero for t in self.TRIPLES}
        for key, val in (rho or {}).items():
            t = tuple(sorted(int(c) for c in (key if not isinstance(key, str) else key)))
            if t not in self.TRIPLES:
                raise PetriError(f"bad rho index {key}")
            self.rho_map[t] = field.normalize(val)
        alpha = alpha or (None, None, None, None)
        self.alpha = tuple(_coerce_form(a_, self.ring, tail, "linear") for a_ in alpha)
        if len(self.alpha) != 4:
            raise PetriError("genus 6 needs 4 alpha forms")
        self.a_diag = {}
        for key, val in (a_diag or {}).items():
            s, i, j = key
            if s not in (i, j) or _pair(i, j) not in self.PAIRS:
                raise PetriError(f"bad diagonal index {key}")
            self.a_diag[(s,) + _pair(i, j)] = _coerce_form(val, self.ring, tail, "linear")
        self.b = {}
        self.q = {}
        for key, val in (q or {}).items():
            if _pair(*key) not in self.PAIRS:
                raise PetriError(f"bad pair {key}")
            self.q[_pair(*key)] = _coerce_form(val, self.ring, tail, "quadratic")
        x0x5 = self.ring.variable("x0") * self.ring.variable("x5")
        for key, val in (b or {}).items():
            pair = _pair(*key)
            if pair not in self.PAIRS:
                raise PetriError(f"bad pair {key}")
            if pair in self.q:
                raise PetriError(f"pair {pair} given both q and b")
            self.b[pair] = field.normalize(val)
            self.q[pair] = x0x5.scale(self.b[pair])

    def rho(self, i, j, k):
        return self.rho_map[tuple(sorted((i, j, k)))]

    def a(self, s, i, j):
        i, j = _pair(i, j)
        if s in (i, j):
            return self.a_diag.get((s, i, j), self.ring.zero())
        r = self.rho(s, i, j)
        if not self.field.is_zero(r) and self.alpha[s - 1].is_zero():
            raise PetriError(f"alpha_{s} is zero but referenced (nonzero rho_{s}{i}{j})")
        return self.alpha[s - 1].scale(r)

    def q_form(self, i, j):
        return self.q.get(_pair(i, j), self.ring.zero())


# ---------------------------------------------------------------------------
# quadric builders

def build_g5_quadrics(sys: PetriSystemG5):
    """The three normalised quadrics f_12, f_13, f_23."""
    ring = sys.ring
    x = {i: ring.variable(f"x{i}") for i in (1, 2, 3)}
    out = {}
    for (i, j) in sys.PAIRS:
        (k,) = [s for s in sys.INDICES if s not in (i, j)]
        f = x[i] * x[j]
        f = f - sys.a(i, i, j) * x[i] - sys.a(j, i, j) * x[j] - sys.a(k, i, j) * x[k]
        out[(i, j)] = f - sys.q_form(i, j)
    return out


def build_g6_quadrics(sys: PetriSystemG6):
    """The six normalised quadrics f_ij, 1 <= i < j <= 4."""
    ring = sys.ring
    x = {i: ring.variable(f"x{i}") for i in (1, 2, 3, 4)}
    out = {}
    for (i, j) in sys.PAIRS:
        f = x[i] * x[j]
        for s in sys.INDICES:
            f = f - sys.a(s, i, j) * x[s]
        out[(i, j)] = f - sys.q_form(i, j)
    return out


def _quadrics(sys):
    if isinstance(sys, PetriSystemG5):
        return build_g5_quadrics(sys)
    return build_g6_quadrics(sys)


# ---------------------------------------------------------------------------
# the degree-5 surface combinations

def surface_quadrics(sys: PetriSystemG6):
    """The six combinations F_1..F_6 spanning the surface ideal, plus the
    dimension of their span in degree 2.

    Requires rho_123 and rho_124 nonzero (renumber first if needed).  The
    one linear dependence rho_234(F1-F3) - rho_124(F2-F6) + rho_134(F4-F5)
    is checked to vanish identically.
    """
    fz = sys.field.is_zero
    if fz(sys.rho(1, 2, 3)) or fz(sys.rho(1, 2, 4)):
        raise PetriError("surface combinations need rho_123 and rho_124 nonzero")
    f = build_g6_quadrics(sys)
    r = sys.rho
    F = (
        f[(1, 2)].scale(r(1, 3, 4)) - f[(1, 4)].scale(r(1, 2, 3)),
        f[(2, 3)].scale(r(1, 3, 4)) - f[(3, 4)].scale(r(1, 2, 3)),
        f[(1, 3)].scale(r(1, 2, 4)) - f[(1, 4)].scale(r(1, 2, 3)),
        f[(2, 3)].scale(r(1, 2, 4)) - f[(2, 4)].scale(r(1, 2, 3)),
        f[(1, 2)].scale(r(2, 3, 4)) - f[(2, 4)].scale(r(1, 2, 3)),
        f[(1, 3)].scale(r(2, 3, 4)) - f[(3, 4)].scale(r(1, 2, 3)),
    )
    dep = (F[0] - F[2]).scale(r(2, 3, 4)) - (F[1] - F[5]).scale(r(1, 2, 4)) \
        + (F[3] - F[4]).scale(r(1, 3, 4))
    if not dep.is_zero():
        raise AssertionError("dependence relation failed to vanish")
    from . import linalg
    rows = [dict(Fi.terms) for Fi in F if not Fi.is_zero()]
    span_dim = linalg.rank(rows, sys.field)
    return F, span_dim


def fprime_basis(sys: PetriSystemG6):
    """The reduced five-element basis of the degree-2 part of the surface
    ideal, split by which of rho_134, rho_234 vanish."""
    fz = sys.field.is_zero
    if fz(sys.rho(1, 2, 3)) or fz(sys.rho(1, 2, 4)):
        raise PetriError("F' basis needs rho_123 and rho_124 nonzero")
    f = build_g6_quadrics(sys)
    r = sys.rho
    r123, r124, r134, r234 = r(1, 2, 3), r(1, 2, 4), r(1, 3, 4), r(2, 3, 4)
    if fz(r134) and fz(r234):
        return (f[(1, 3)], f[(1, 4)], f[(2, 3)], f[(2, 4)], f[(3, 4)])
    if fz(r234):
        return (
            f[(1, 2)].scale(r134) - f[(1, 4)].scale(r123),
            f[(1, 3)].scale(r124) - f[(1, 4)].scale(r123),
            f[(2, 3)], f[(2, 4)], f[(3, 4)],
        )
    if fz(r134):
        # mirror of the previous case under swapping indices 1 and 2
        return (
            f[(1, 2)].scale(r234) - f[(2, 4)].scale(r123),
            f[(2, 3)].scale(r124) - f[(2, 4)].scale(r123),
            f[(1, 3)], f[(1, 4)], f[(3, 4)],
        )
    return (
        f[(1, 2)].scale(sys.field.mul(r234, r134)) - f[(3, 4)].scale(sys.field.mul(r124, r123)),
        f[(1, 3)].scale(r234) - f[(3, 4)].scale(r123),
        f[(1, 4)].scale(r234) - f[(3, 4)].scale(r124),
        f[(2, 3)].scale(r134) - f[(3, 4)].scale(r123),
        f[(2, 4)].scale(r134) - f[(3, 4)].scale(r124),
    )


# ---------------------------------------------------------------------------
# the rho graph

class RhoGraph:
    """Graph on {1,2,3,4} with an edge (i,j) when some rho_{ijk} is nonzero."""

    def __init__(self, edges):
        self.vertices = frozenset((1, 2, 3, 4))
        self.edges = frozenset(frozenset(e) for e in edges)
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            a, b = tuple(e)
            parent[find(a)] = find(b)
        comps = {}
        for v in self.vertices:
            comps.setdefault(find(v), set()).add(v)
        self.components = tuple(sorted((frozenset(c) for c in comps.values()),
                                       key=lambda c: min(c)))

    @property
    def predicted_beta13(self) -> int:
        return len(self.components) - 1

    def __repr__(self):
        comps = ["{" + ",".join(map(str, sorted(c))) + "}" for c in self.components]
        return f"<rho-graph components {' '.join(comps)}>"


def rho_graph(sys: PetriSystemG6) -> RhoGraph:
    edges = set()
    for (i, j) in combinations(sys.INDICES, 2):
        if any(not sys.field.is_zero(sys.rho(i, j, k))
               for k in sys.INDICES if k not in (i, j)):
            edges.add((i, j))
    return RhoGraph(edges)


def normalize_numbering(sys: PetriSystemG6):
    """Lexicographically first permutation making rho_123, rho_124 nonzero."""
    fz = sys.field.is_zero
    for sigma in permutations((1, 2, 3, 4)):
        if not fz(sys.rho(sigma[0], sigma[1], sigma[2])) and \
           not fz(sys.rho(sigma[0], sigma[1], sigma[3])):
            return sigma
    raise NormalizationError(rho_graph(sys))


def renumbered(sys: PetriSystemG6, sigma) -> PetriSystemG6:
    """The system after the relabelling i -> position of i under sigma.

    The new quadric f'_ij is the old f_{sigma(i)sigma(j)} with variable
    x_{sigma(s)} renamed to x_s.
    """
    sg = {i + 1: sigma[i] for i in range(4)}
    swap = {f"x{sg[s]}": sys.ring.variable(f"x{s}") for s in (1, 2, 3, 4)}
    rho = {}
    for (i, j, k) in sys.TRIPLES:
        rho[(i, j, k)] = sys.rho(sg[i], sg[j], sg[k])
    alpha = tuple(sys.alpha[sg[s] - 1] for s in (1, 2, 3, 4))
    a_diag = {}
    for (s, i, j), form in sys.a_diag.items():
        inv = {v: k for k, v in sg.items()}
        a_diag[(inv[s],) + _pair(inv[i], inv[j])] = form
    q = {_pair(*(map(lambda u: {v: k for k, v in sg.items()}[u], pair))): form
         for pair, form in sys.q.items()}
    out = PetriSystemG6(sys.field, rho=rho, alpha=alpha, a_diag=a_diag, q=q)
    out._substitution = swap
    return out


# ---------------------------------------------------------------------------
# Petri syzygies

def _syzygy_quadric_part(sys, quads, i, k, l):
    """x_k f_il - x_l f_ik + sum_{s != k} a_sil f_sk - sum_{s != l} a_sik f_sl."""
    ring = sys.ring
    x = {s: ring.variable(f"x{s}") for s in sys.INDICES}
    expr = x[k] * quads[_pair(i, l)] - x[l] * quads[_pair(i, k)]
    for s in sys.INDICES:
        if s != k:
            expr = expr + sys.a(s, i, l) * quads[_pair(s, k)]
        if s != l:
            expr = expr - sys.a(s, i, k) * quads[_pair(s, l)]
    return expr


def recovered_cubics(sys, quads=None):
    """Cubics G_kl recovered from the syzygy with the smallest valid index:
    G_kl = -(quadric part of S_{i0,k,l}) / rho_{i0,k,l}."""
    quads = quads or _quadrics(sys)
    fz = sys.field.is_zero
    out = {}
    for (k, l) in combinations(sys.INDICES, 2):
        for i in sys.INDICES:
            if i in (k, l) or fz(sys.rho(i, k, l)):
                continue
            part = _syzygy_quadric_part(sys, quads, i, k, l)
            out[(k, l)] = part.scale(sys.field.neg(sys.field.inv(sys.rho(i, k, l))))
            break
    return out


def petri_syzygy_residuals(sys, curve_cubics=None):
    """Normal forms of the Petri syzygy combinations against the quadrics.

    Residuals are reduced against the quadric list itself (the would-be
    Groebner basis), so an all-zero output certifies that the system
    satisfies Petri's syzygies.  Ordered by (k, l, i); the recovery triple
    of each pair is omitted unless explicit cubics are supplied.
    """
    quads = _quadrics(sys)
    divisors = [quads[p] for p in sys.PAIRS]
    fz = sys.field.is_zero
    if curve_cubics is None:
        cubics = recovered_cubics(sys, quads)
        skip_recovery = True
    else:
        cubics = {_pair(*k): v for k, v in curve_cubics.items()}
        skip_recovery = False
    residuals = []
    for (k, l) in combinations(sys.INDICES, 2):
        recovery_seen = False
        for i in sys.INDICES:
            if i in (k, l):
                continue
            r = sys.rho(i, k, l)
            if skip_recovery and not recovery_seen and not fz(r):
                recovery_seen = True
                continue
            expr = _syzygy_quadric_part(sys, quads, i, k, l)
            if not fz(r):
                if (k, l) not in cubics:
                    raise PetriError(f"no cubic available for pair {(k, l)}")
                expr = expr + cubics[(k, l)].scale(r)
            residuals.append(normal_form(expr, divisors, GREVLEX))
    return residuals


def verify_lemma_34(sys: PetriSystemG6, i, k, l, n) -> bool:
    """Formal lifting identity for the syzygy combination on (i,k,l,n).

    Checks (a) the three cubic coefficients in the combination
    rho_ikn rho_iln S_ikl + rho_ikn rho_ikl S_iln + rho_iln rho_ikl S_ink
    coincide, so they cancel through G_kl + G_ln + G_nk = 0, and (b) the
    rearranged identity: LHS - RHS equals that combination of the quadric
    parts exactly.  Holds for arbitrary coefficient values.
    """
    if len({i, k, l, n}) != 4:
        raise PetriError("indices must be four distinct values")
    field = sys.field
    r_ikl = sys.rho(i, k, l)
    r_ikn = sys.rho(i, k, n)
    r_iln = sys.rho(i, l, n)
    c_kl = field.mul(field.mul(r_ikn, r_iln), r_ikl)
    c_ln = field.mul(field.mul(r_ikn, r_ikl), r_iln)
    c_nk = field.mul(field.mul(r_iln, r_ikl), sys.rho(i, n, k))
    if not (c_kl == c_ln == c_nk):
        return False

    quads = _quadrics(sys)
    f = lambda a, b: quads[_pair(a, b)]
    x = {s: sys.ring.variable(f"x{s}") for s in sys.INDICES}
    alpha = {s: sys.alpha[s - 1] for s in sys.INDICES}

    lhs = (x[k] * (f(i, l).scale(r_ikn) - f(i, n).scale(r_ikl))).scale(r_iln) \
        + (x[l] * (f(i, n).scale(r_ikl) - f(i, k).scale(r_iln))).scale(r_ikn) \
        + (x[n] * (f(i, k).scale(r_iln) - f(i, l).scale(r_ikn))).scale(r_ikl)

    rhs = sys.ring.zero()
    for s in (i, l):  # s != k, n
        rhs = rhs + (sys.a(s, i, l) * (f(s, n).scale(r_ikl) - f(s, k).scale(r_iln))).scale(r_ikn)
    for s in (i, k):  # s != n, l
        rhs = rhs + (sys.a(s, i, k) * (f(s, l).scale(r_ikn) - f(s, n).scale(r_ikl))).scale(r_iln)
    for s in (i, n):  # s != k, l
        rhs = rhs + (sys.a(s, i, n) * (f(s, k).scale(r_iln) - f(s, l).scale(r_ikn))).scale(r_ikl)
    rhs = rhs + (alpha[n] * (f(l, n).scale(r_ikn) - f(k, n).scale(r_iln))).scale(field.mul(r_ikn, r_iln))
    rhs = rhs + (alpha[l] * (f(l, k).scale(r_iln) - f(l, n).scale(r_ikl))).scale(field.mul(r_ikl, r_iln))
    rhs = rhs + (alpha[k] * (f(k, n).scale(r_ikl) - f(l, k).scale(r_ikn))).scale(field.mul(r_ikl, r_ikn))

    combo = _syzygy_quadric_part(sys, quads, i, k, l).scale(field.mul(r_ikn, r_iln)) \
        + _syzygy_quadric_part(sys, quads, i, l, n).scale(field.mul(r_ikn, r_ikl)) \
        + _syzygy_quadric_part(sys, quads, i, n, k).scale(field.mul(r_iln, r_ikl))

    return (lhs - rhs - combo).is_zero()


# ---------------------------------------------------------------------------
# concrete Petri-scheme points for the degenerate rho patterns
#
# Found by solving the syzygy-residual system (affine-linear in the q data
# once rho, alpha and the diagonal a are fixed); validated by
# petri_syzygy_residuals in the test suite.

def petri_point_with_rho234_zero(field=QQ) -> PetriSystemG6:
    """Petri point with exactly rho_234 = 0; its surface ideal has the
    degenerate initial ideal led by x1*x4^2."""
    sq = "(x0+x5)*(x0+x5)"
    return PetriSystemG6(field,
                         rho={(1, 2, 3): 1, (1, 2, 4): 1, (1, 3, 4): 1},
                         alpha=("x0+x5",) * 4,
                         q={(2, 3): sq, (2, 4): sq, (3, 4): sq})


def petri_point_with_rho134_rho234_zero(field=QQ) -> PetriSystemG6:
    """Petri point with rho_134 = rho_234 = 0; its surface ideal has the
    degenerate initial ideal led by x1^2*x5."""
    return PetriSystemG6(field,
                         rho={(1, 2, 3): 1, (1, 2, 4): 1},
                         alpha=("x0+x5",) * 4,
                         q={(3, 4): "(x0+x5)*(x0+x5)", (1, 2): "x0*x5"})


# ---------------------------------------------------------------------------
# shape extraction (inverse of build_g6_quadrics)

def petri_g6_from_quadrics(quads, field=None) -> PetriSystemG6:
    """Recover a genus-6 Petri system from quadrics in normalised shape.

    Input is a dict pair -> Polynomial in the canonical genus-6 ring with
    f_ij = x_i x_j + (x0,x5)-linear multiples of the x_s + a (x0,x5)-quadric.
    Raises PetriError when the coefficients do not factor as rho * alpha.
    """
    some = next(iter(quads.values()))
    ring = some.ring
    field = field or ring.field
    x5, x0 = ring.index("x5"), ring.index("x0")
    var = {s: ring.index(f"x{s}") for s in (1, 2, 3, 4)}

    def mono(**exps):
        e = [0] * ring.nvars
        for name, k in exps.items():
            e[ring.index(name)] = k
        return tuple(e)

    coeff_forms = {}
    a_diag = {}
    q = {}
    for (i, j) in PetriSystemG6.PAIRS:
        fij = quads[(i, j)]
        if fij.coefficient(mono(**{f"x{i}": 1, f"x{j}": 1})) != field.one:
            raise PetriError(f"f_{i}{j} is not monic in x{i}x{j}")
        for (s, t) in PetriSystemG6.PAIRS:
            if (s, t) != (i, j) and fij.coefficient(mono(**{f"x{s}": 1, f"x{t}": 1})) != field.zero:
                raise PetriError(f"f_{i}{j} contains the cross term x{s}x{t}")
        for s in (1, 2, 3, 4):
            if fij.coefficient(mono(**{f"x{s}": 2})) != field.zero:
                raise PetriError(f"f_{i}{j} contains x{s}^2")
        qpart = {}
        for m, c in fij.terms:
            if all(e == 0 for idx, e in enumerate(m) if idx not in (x5, x0)):
                if sum(m) > 0:
                    qpart[m] = field.neg(c)
        q[(i, j)] = Polynomial.from_dict(ring, GREVLEX, qpart)
        for s in (1, 2, 3, 4):
            form = {}
            for tail_idx in (x5, x0):
                e = [0] * ring.nvars
                e[var[s]] = 1
                e[tail_idx] = 1
                c = fij.coefficient(tuple(e))
                if not field.is_zero(c):
                    e2 = [0] * ring.nvars
                    e2[tail_idx] = 1
                    form[tuple(e2)] = field.neg(c)
            form = Polynomial.from_dict(ring, GREVLEX, form)
            if s in (i, j):
                if form:
                    a_diag[(s, i, j)] = form
            else:
                coeff_forms[(s, (i, j))] = form

    # factor the off-diagonal table as rho_T * alpha_s
    def proportional(p, ref):
        """Scalar c with p = c * ref, or None."""
        if p.is_zero():
            return field.zero
        if ref.is_zero() or dict((m, 1) for m, _ in p.terms) != dict((m, 1) for m, _ in ref.terms):
            ratio = None
        else:
            ratio = field.div(p.lc(), ref.lc())
            if p != ref.scale(ratio):
                ratio = None
        return ratio

    triples = list(PetriSystemG6.TRIPLES)
    rho = {t: None for t in triples}
    alpha = {s: None for s in (1, 2, 3, 4)}
    for t in triples:
        forms = [coeff_forms[(s, _pair(*sorted(set(t) - {s})))] for s in t]
        if all(f.is_zero() for f in forms):
            rho[t] = field.zero
        elif any(f.is_zero() for f in forms):
            raise PetriError(f"inconsistent vanishing in rho block {t}")
    changed = True
    while changed:
        changed = False
        for t in triples:
            if rho[t] is not None and field.is_zero(rho[t]):
                continue
            for s in t:
                form = coeff_forms[(s, _pair(*sorted(set(t) - {s})))]
                if rho[t] is None and alpha[s] is not None:
                    c = proportional(form, alpha[s])
                    if c is None:
                        raise PetriError(f"coefficients in block {t} not proportional")
                    rho[t] = c
                    changed = True
                elif rho[t] is not None and alpha[s] is None:
                    alpha[s] = form.scale(field.inv(rho[t]))
                    changed = True
        if all(v is not None for v in rho.values()):
            break
        if not changed and any(v is None for v in rho.values()):
            t = next(t for t in triples if rho[t] is None)
            s = t[0]
            alpha[s] = coeff_forms[(s, _pair(*sorted(set(t) - {s})))]
            rho[t] = field.one
            changed = True
    for t in triples:
        for s in t:
            form = coeff_forms[(s, _pair(*sorted(set(t) - {s})))]
            want = (alpha[s] or ring.zero()).scale(rho[t])
            if form != want:
                raise PetriError(f"off-diagonal data in block {t} is not rho*alpha")
    alpha_tuple = tuple(alpha[s] if alpha[s] is not None else ring.zero() for s in (1, 2, 3, 4))
    e = [0] * ring.nvars
    e[x5] = 1
    e[x0] = 1
    x0x5_mono = tuple(e)
    b_out = {}
    q_out = {}
    for p, qq in q.items():
        if not qq:
            continue
        if len(qq.terms) == 1 and qq.terms[0][0] == x0x5_mono:
            b_out[p] = qq.terms[0][1]
        else:
            q_out[p] = qq
    out = PetriSystemG6(field, rho={t: rho[t] for t in triples}, alpha=alpha_tuple,
                        a_diag=a_diag, q=q_out, b=b_out)
    rebuilt = build_g6_quadrics(out)
    for p in PetriSystemG6.PAIRS:
        if rebuilt[p] != quads[p]:
            raise PetriError(f"extraction failed to reproduce f_{p}")
    return out
