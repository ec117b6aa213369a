"""Numerical invariants of homogeneous ideals.

Initial ideals, Hilbert series by pivot recursion, dimension / degree /
arithmetic genus, minimal graded free resolutions with Betti diagrams,
and the Hilbert-scheme tangent-space dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .groebner import (GroebnerBasis, Ideal, ModElement, ModuleOrder,
                       is_saturated, schreyer_stage)
from .rings import (GREVLEX, Polynomial, mono_deg, mono_divides)


# ---------------------------------------------------------------------------
# monomial ideals and Hilbert series

@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generators of a monomial ideal, sorted by the active order."""

    ring: object
    order: object
    generators: tuple

    @staticmethod
    def from_monomials(ring, monomials, order=GREVLEX) -> "MonomialIdeal":
        monos = sorted(set(monomials), key=order.key)
        minimal = []
        for m in monos:
            if not any(mono_divides(g, m) for g in minimal):
                minimal.append(m)
        return MonomialIdeal(ring, order, tuple(minimal))

    def contains(self, mono) -> bool:
        return any(mono_divides(g, mono) for g in self.generators)

    def monomial_polys(self):
        return tuple(self.ring.monomial(m, order=self.order) for m in self.generators)

    def __str__(self):
        return "<" + ", ".join(str(self.ring.monomial(m, order=self.order))
                               for m in self.generators) + ">"


def initial_ideal(I: Ideal, order=GREVLEX) -> MonomialIdeal:
    """Leading monomials of the reduced Groebner basis, minimalised."""
    gb = I.groebner(order)
    return MonomialIdeal.from_monomials(I.ring, gb.leading_monomials(), order)


def _poly1_mul(a, b):
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return res


def _poly1_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def hilbert_series_numerator(M: MonomialIdeal):
    """Integer coefficients of N(t) with HS_{R/M}(t) = N(t)/(1-t)^n.

    Pivot recursion: split on a variable of a non-pure-power generator,
    memoised on the generator set.
    """
    memo = {}

    def rec(gens):
        res = memo.get(gens)
        if res is not None:
            return res
        if any(mono_deg(g) == 0 for g in gens):
            res = []
        else:
            mixed = [g for g in gens if sum(1 for e in g if e) > 1]
            if not mixed:
                res = [1]
                for g in gens:
                    term = [0] * (mono_deg(g) + 1)
                    term[0] = 1
                    term[-1] = -1
                    res = _poly1_mul(res, term)
            else:
                counts = {}
                for g in mixed:
                    for v, e in enumerate(g):
                        if e:
                            counts[v] = counts.get(v, 0) + 1
                v = max(sorted(counts), key=lambda u: counts[u])
                added = _minimalise([g for g in gens if g[v] == 0]
                                    + [tuple(1 if u == v else 0 for u in range(len(mixed[0])))])
                colon = _minimalise([tuple(e - 1 if u == v and e else e
                                           for u, e in enumerate(g)) for g in gens])
                res = _poly1_add(rec(added), [0] + list(rec(colon)))
        res = _trim(list(res))
        memo[gens] = tuple(res)
        return tuple(res)

    def _minimalise(monos):
        monos = sorted(set(monos), key=mono_deg)
        out = []
        for m in monos:
            if not any(mono_divides(g, m) for g in out):
                out.append(m)
        return tuple(out)

    return list(rec(tuple(M.generators)))


def hilbert_function(M: MonomialIdeal, d: int) -> int:
    """Number of degree-d standard monomials of M (the Hilbert function of R/M)."""
    n = M.ring.nvars
    numer = hilbert_series_numerator(M)
    return sum(c * comb(d - j + n - 1, n - 1) for j, c in enumerate(numer) if d - j >= 0)


@dataclass(frozen=True)
class HilbertData:
    """Dimension, degree, Hilbert polynomial and arithmetic genus of V(I).

    proj_dimension is the dimension of the projective zero set (-1 when
    empty); hilbert_polynomial is stored by ascending coefficients.
    """

    proj_dimension: int
    degree: int
    hilbert_polynomial: tuple
    arithmetic_genus: object

    def hp(self, d):
        return sum(c * d ** i for i, c in enumerate(self.hilbert_polynomial))


def _binom_poly(shift: int, r: int):
    """binom(t + shift, r) as a tuple of Fraction coefficients in t."""
    coeffs = [Fraction(1)]
    for i in range(1, r + 1):
        # multiply by (t + shift - i + 1) / i
        c = Fraction(shift - i + 1)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            nxt[k] += a * c
            nxt[k + 1] += a
        coeffs = [a / i for a in nxt]
    return coeffs


def hilbert_data(I: Ideal, order=GREVLEX) -> HilbertData:
    """Hilbert data of a proper homogeneous ideal, via its initial ideal."""
    M = initial_ideal(I, order)
    n = I.ring.nvars
    numer = hilbert_series_numerator(M)
    if not numer:
        raise ValueError("unit ideal has no Hilbert data")
    # cancel all (1-t) factors from the numerator
    cancelled = 0
    q = list(numer)
    while q and sum(q) == 0:
        # synthetic division by (1-t): reversed cumulative sums
        out = [0] * (len(q) - 1)
        acc = 0
        for j in range(len(q) - 1):
            acc += q[j]
            out[j] = acc
        q = _trim(out)
        cancelled += 1
    krull = n - cancelled
    degree = sum(q)
    proj_dim = krull - 1
    if proj_dim < 0:
        return HilbertData(-1, degree, (), None)
    hp = [Fraction(0)] * max(proj_dim + 1, 1)
    for j, c in enumerate(q):
        for k, a in enumerate(_binom_poly(proj_dim - j, proj_dim)):
            hp[k] += c * a
    hp_t = tuple(hp)
    genus = (-1) ** proj_dim * (hp_t[0] - 1)
    if genus.denominator != 1:
        raise AssertionError("arithmetic genus must be an integer")
    return HilbertData(proj_dim, degree, hp_t, int(genus))


# ---------------------------------------------------------------------------
# free resolutions

@dataclass
class ResolutionStage:
    """Matrix F_k -> F_{k-1}: entry [r][c] multiplies basis c into slot r."""

    row_shifts: list
    col_shifts: list
    entries: list


class FreeResolution:
    """Graded free resolution of R/I; minimal after construction."""

    def __init__(self, ring, stages):
        self.ring = ring
        self.stages = stages

    @property
    def length(self):
        return len(self.stages)

    def rank(self, k: int) -> int:
        if k == 0:
            return len(self.stages[0].row_shifts) if self.stages else 1
        return len(self.stages[k - 1].col_shifts)

    def betti(self) -> "BettiDiagram":
        entries = {(0, 0): 1}
        for k, st in enumerate(self.stages, start=1):
            for s in st.col_shifts:
                entries[(k, s)] = entries.get((k, s), 0) + 1
        return BettiDiagram(entries)

    def is_minimal(self) -> bool:
        for st in self.stages:
            for r, row_shift in enumerate(st.row_shifts):
                for c, col_shift in enumerate(st.col_shifts):
                    e = st.entries[r][c]
                    if e and row_shift == col_shift:
                        return False
        return True

    def compositions_are_zero(self) -> bool:
        for k in range(len(self.stages) - 1):
            a, b = self.stages[k], self.stages[k + 1]
            for r in range(len(a.row_shifts)):
                for c in range(len(b.col_shifts)):
                    acc = self.ring.zero()
                    for m in range(len(a.col_shifts)):
                        acc = acc + a.entries[r][m] * b.entries[m][c]
                    if not acc.is_zero():
                        return False
        return True

    def entries_are_homogeneous(self) -> bool:
        for st in self.stages:
            for r, rs in enumerate(st.row_shifts):
                for c, cs in enumerate(st.col_shifts):
                    e = st.entries[r][c]
                    if e and (not e.is_homogeneous() or e.degree() != cs - rs):
                        return False
        return True


def _trim_module_basis(elems):
    """Drop basis elements whose lead is divisible by another's lead.

    The rest still generate the leading-term module, hence remain a
    Groebner basis of the same syzygy module; this keeps the
    lex-descending length bound intact.
    """
    kept = []
    for b in elems:
        pos, mono, _ = b.lead
        redundant = any(k.lead[0] == pos and mono_divides(k.lead[1], mono) for k in kept)
        if not redundant:
            kept.append(b)
    return kept


def _schreyer_bases(gb: GroebnerBasis):
    """Iterated Schreyer syzygy bases; each stage is a trimmed module GB."""
    ring = gb.ring
    field = ring.field
    elems = sorted(gb.elements, key=lambda g: g.lm(), reverse=True)  # lex-descending
    ord0 = ModuleOrder.rank_one(ring, gb.order)
    bases = [[ModElement({(0, m): c for m, c in g.terms}, ord0) for g in elems]]
    orders = [ord0]
    shifts = [[g.degree() for g in elems]]
    while True:
        if len(bases) > ring.nvars + 1:
            raise AssertionError("Schreyer resolution exceeded the variable bound")
        syz = schreyer_stage(bases[-1], orders[-1], field)
        if not syz:
            break
        nxt = orders[-1].induced([(b.lead[0], b.lead[1]) for b in bases[-1]])
        elems2 = [ModElement(s, nxt) for s in syz]
        elems2.sort(key=lambda b: (b.lead[0], tuple(-e for e in b.lead[1])))
        elems2 = _trim_module_basis(elems2)
        prev_shifts = shifts[-1]
        shifts.append([mono_deg(b.lead[1]) + prev_shifts[b.lead[0]] for b in elems2])
        bases.append(elems2)
        orders.append(nxt)
    return bases, shifts


def _stage_matrices(ring, order, bases, shifts):
    stages = []
    for k, basis in enumerate(bases):
        nrows = 1 if k == 0 else len(bases[k - 1])
        row_shifts = [0] if k == 0 else list(shifts[k - 1])
        entries = [[None] * len(basis) for _ in range(nrows)]
        for c, b in enumerate(basis):
            per_row = [dict() for _ in range(nrows)]
            for (pos, m), cc in b.terms.items():
                per_row[pos][m] = cc
            for r in range(nrows):
                entries[r][c] = Polynomial.from_dict(ring, order, per_row[r])
        stages.append(ResolutionStage(row_shifts, list(shifts[k]), entries))
    return stages


def _prune(ring, stages):
    """Cancel unit entries until the complex is minimal (Gaussian elimination
    on the complex; quasi-isomorphism preserves exactness and R/I)."""
    field = ring.field

    def find_unit():
        for k, st in enumerate(stages):
            for r, rs in enumerate(st.row_shifts):
                for c, cs in enumerate(st.col_shifts):
                    if rs == cs and st.entries[r][c]:
                        return k, r, c
        return None

    while True:
        found = find_unit()
        if found is None:
            break
        k, r, c = found
        st = stages[k]
        u = st.entries[r][c].lc()
        nrows, ncols = len(st.row_shifts), len(st.col_shifts)
        old = st.entries
        new_entries = []
        for i in range(nrows):
            if i == r:
                continue
            row = []
            for j in range(ncols):
                if j == c:
                    continue
                e = old[i][j] - old[i][c] * old[r][j].scale(field.inv(u))
                row.append(e)
            new_entries.append(row)
        st.entries = new_entries
        del st.row_shifts[r]
        del st.col_shifts[c]
        if k + 1 < len(stages):
            nxt = stages[k + 1]
            del nxt.entries[c]
            del nxt.row_shifts[c]
        if k > 0:
            prev = stages[k - 1]
            for row in prev.entries:
                del row[r]
            del prev.col_shifts[r]
        # drop empty tail stages
        while stages and not stages[-1].col_shifts:
            stages.pop()
    return stages


def free_resolution(I: Ideal, order=GREVLEX) -> FreeResolution:
    """Minimal graded free resolution of R/I.

    Built by iterated Schreyer syzygies on module Groebner bases, then
    minimalised by cancelling unit entries.
    """
    cached = I._resolution_cache.get(order)
    if cached is not None:
        return cached
    gb = I.groebner(order)
    if gb.elements[0].degree() == 0:
        raise ValueError("unit ideal has no resolution")
    bases, shifts = _schreyer_bases(gb)
    stages = _stage_matrices(I.ring, order, bases, shifts)
    stages = _prune(I.ring, stages)
    res = FreeResolution(I.ring, stages)
    if len(res.stages) > I.ring.nvars:
        raise AssertionError("resolution longer than the number of variables")
    if not res.compositions_are_zero():
        raise AssertionError("pruned resolution stages do not compose to zero")
    I._resolution_cache[order] = res
    return res


# ---------------------------------------------------------------------------
# Betti diagrams

class BettiDiagram:
    """Graded Betti numbers beta_{i,j} of a minimal free resolution."""

    def __init__(self, entries):
        self.entries = {k: v for k, v in entries.items() if v}

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def beta13(self) -> int:
        return self.beta(1, 3)

    @property
    def max_i(self):
        return max(i for i, _ in self.entries)

    @property
    def max_j(self):
        return max(j for _, j in self.entries)

    def rows(self):
        """Macaulay layout: rows[r][c] = beta_{c, c+r}."""
        nrows = max(j - i for i, j in self.entries) + 1
        ncols = self.max_i + 1
        table = [[0] * ncols for _ in range(nrows)]
        for (i, j), v in self.entries.items():
            table[j - i][i] = v
        return table

    @staticmethod
    def from_rows(rows, row_offset=0) -> "BettiDiagram":
        entries = {}
        for r, row in enumerate(rows):
            for i, v in enumerate(row):
                if v:
                    entries[(i, i + r + row_offset)] = v
        return BettiDiagram(entries)

    def reverse(self) -> "BettiDiagram":
        """The diagram reflected through (i,j) -> (max_i - i, max_j - j)."""
        mi, mj = self.max_i, self.max_j
        return BettiDiagram({(mi - i, mj - j): v for (i, j), v in self.entries.items()})

    def is_self_dual(self) -> bool:
        return self == self.reverse()

    def __eq__(self, other):
        return isinstance(other, BettiDiagram) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __str__(self):
        return "; ".join(",".join(str(v) for v in row) for row in self.rows())

    def __repr__(self):
        return f"<betti {self}>"


def betti_diagram(I: Ideal, order=GREVLEX) -> BettiDiagram:
    """Betti diagram read off the shifts of the minimal resolution."""
    return free_resolution(I, order).betti()


def betti_from_tor(I: Ideal, order=GREVLEX) -> BettiDiagram:
    """Independent Betti computation: tensor the (non-minimal) Schreyer
    resolution with the residue field and take homology ranks degreewise."""
    gb = I.groebner(order)
    bases, shifts = _schreyer_bases(gb)
    field = I.ring.field
    all_shifts = [[0]] + shifts
    consts = []  # consts[k]: constant part of d_(k+1) as sparse columns
    for k, basis in enumerate(bases):
        cols = []
        for c, b in enumerate(basis):
            col = {}
            for (pos, m), cc in b.terms.items():
                if mono_deg(m) + all_shifts[k][pos] == all_shifts[k + 1][c] and mono_deg(m) == 0:
                    col[pos] = cc
            cols.append(col)
        consts.append(cols)
    entries = {}
    degrees = sorted({s for lv in all_shifts for s in lv})
    for i in range(len(all_shifts)):
        for j in degrees:
            dim = sum(1 for s in all_shifts[i] if s == j)
            if not dim:
                continue
            r_in = _rank_in_degree(consts, all_shifts, i, j, field)
            r_out = _rank_in_degree(consts, all_shifts, i + 1, j, field)
            b = dim - r_in - r_out
            if b:
                entries[(i, j)] = b
    return BettiDiagram(entries)


def _rank_in_degree(consts, all_shifts, k, j, field):
    """Rank of the degree-j block of the constant part of d_k."""
    if k == 0 or k > len(consts):
        return 0
    cols = consts[k - 1]
    rows = []
    for c, col in enumerate(cols):
        if all_shifts[k][c] == j:
            row = {pos: v for pos, v in col.items() if all_shifts[k - 1][pos] == j}
            if row:
                rows.append(row)
    return linalg.rank(rows, field)


def minimal_cubic_generators(I: Ideal, order=GREVLEX) -> int:
    """beta_{1,3} shortcut: cubic generators = dim I_3 - dim (R_1 * I_2)."""
    gb = I.groebner(order)
    ring = I.ring
    field = ring.field
    M = MonomialIdeal.from_monomials(ring, gb.leading_monomials(), order)
    dim_i3 = comb(3 + ring.nvars - 1, ring.nvars - 1) - hilbert_function(M, 3)
    quads = [g for g in gb.elements if g.degree() == 2]
    rows = []
    for x in ring.gens(order):
        for q in quads:
            rows.append(dict((x * q).terms))
    return dim_i3 - linalg.rank(rows, field)


# ---------------------------------------------------------------------------
# Hilbert-scheme tangent space

def tangent_dim(I: Ideal, order=GREVLEX) -> int:
    """Dimension of the degree-0 part of Hom(I, R/I).

    Unknowns are the images of the minimal generators, written over the
    standard monomials of the initial ideal; constraints say every minimal
    syzygy maps to zero in R/I.  Requires a saturated input.
    """
    if not is_saturated(I):
        raise ValueError("tangent_dim requires a saturated ideal")
    res = free_resolution(I, order)
    gb = I.groebner(order)
    M = MonomialIdeal.from_monomials(I.ring, gb.leading_monomials(), order)
    ring = I.ring
    field = ring.field
    d1 = res.stages[0]
    gens = [d1.entries[0][c] for c in range(len(d1.col_shifts))]
    gen_degs = list(d1.col_shifts)

    std = {}

    def standard(d):
        if d not in std:
            std[d] = [m for m in ring.monomials_of_degree(d) if not M.contains(m)]
        return std[d]

    unknowns = []
    for gi, d in enumerate(gen_degs):
        unknowns.extend((gi, m) for m in standard(d))
    if len(res.stages) < 2:
        return len(unknowns)

    d2 = res.stages[1]
    rows = []
    nf_cache = {}
    for s in range(len(d2.col_shifts)):
        deg_s = d2.col_shifts[s]
        row_of = {m: {} for m in standard(deg_s)}
        for gi in range(len(gens)):
            coeff = d2.entries[gi][s]
            if coeff.is_zero():
                continue
            for m in standard(gen_degs[gi]):
                key = (gi, s, m)
                prod = coeff.mul_term(m, field.one)
                red = nf_cache.get(key)
                if red is None:
                    red = gb.normal_form(prod)
                    nf_cache[key] = red
                for mm, cc in red.terms:
                    row_of[mm][(gi, m)] = field.add(row_of[mm].get((gi, m), field.zero), cc)
        rows.extend(r for r in row_of.values() if r)
    return len(unknowns) - linalg.rank(rows, field)
