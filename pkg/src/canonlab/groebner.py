"""Buchberger's algorithm, ideal-theoretic operations and Schreyer syzygies.

Reduced Groebner bases are canonical: elements are monic, mutually
irreducible and listed by increasing leading monomial, so equality of
ideals is equality of these lists.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import RationalField
from .rings import (GREVLEX, Block, Polynomial, PolynomialRing, mono_coprime,
                    mono_div, mono_divides, mono_lcm, mono_mul)


class Ideal:
    """Homogeneous ideal given by generators; Groebner bases are cached."""

    __slots__ = ("ring", "generators", "_gb_cache", "_resolution_cache")

    def __init__(self, ring, generators, check=True):
        gens = tuple(generators)
        if check:
            for g in gens:
                if g.ring != ring:
                    raise ValueError("generator from a different ring")
                if g.is_zero():
                    raise ValueError("zero generator")
                if not g.is_homogeneous():
                    raise ValueError(f"inhomogeneous generator {g}")
        self.ring = ring
        self.generators = gens
        self._gb_cache = {}
        self._resolution_cache = {}

    def groebner(self, order=GREVLEX) -> "GroebnerBasis":
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = buchberger(self, order)
            self._gb_cache[order] = gb
        return gb

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise ValueError("ideals in different rings")
            extra = other.generators
        else:
            extra = tuple(other)
        return Ideal(self.ring, self.generators + tuple(extra))

    def equals(self, other) -> bool:
        return ideal_equal(self, other)

    def __repr__(self):
        return f"<ideal ({len(self.generators)} gens) in {self.ring!r}>"


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, autoreduced, sorted by leading monomial."""

    order: object
    elements: tuple
    origin: Ideal = None

    @property
    def ring(self):
        return self.elements[0].ring

    def leading_monomials(self):
        return tuple(g.lm() for g in self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# division

def _divide_terms(fterms, basis, order, want_quotients=False, key_cache=None):
    """Full multivariate division of a term dict by a list of polynomials.

    Divisors are tried in basis order and the current leading term is
    reduced first, so the outcome is deterministic.
    """
    if not basis:
        raise ValueError("empty divisor list")
    ring = basis[0].ring
    field = ring.field
    leads = [(g.lm(), g.lc(), g.terms) for g in basis]
    work = dict(fterms)
    rem = {}
    quots = [{} for _ in basis] if want_quotients else None
    cache = key_cache if key_cache is not None else {}
    raw_key = order.key

    def key(m):
        k = cache.get(m)
        if k is None:
            k = raw_key(m)
            cache[m] = k
        return k

    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for bi, (bm, bc, bterms) in enumerate(leads):
            if mono_divides(bm, m):
                q = mono_div(m, bm)
                qc = field.div(c, bc)
                if want_quotients:
                    qd = quots[bi]
                    acc = field.add(qd.get(q, field.zero), qc)
                    if field.is_zero(acc):
                        qd.pop(q, None)
                    else:
                        qd[q] = acc
                for tm, tc in bterms[1:]:
                    mm = mono_mul(tm, q)
                    acc = field.sub(work.get(mm, field.zero), field.mul(qc, tc))
                    if field.is_zero(acc):
                        work.pop(mm, None)
                    else:
                        work[mm] = acc
                break
        else:
            rem[m] = c
    return quots, rem


def normal_form(f: Polynomial, basis, order=None) -> Polynomial:
    """Remainder of f on full division by the basis list."""
    basis = [g for g in basis]
    for g in basis:
        if g.is_zero():
            raise ValueError("zero divisor in basis")
    order = order or f.order
    f = f.with_order(order)
    basis = [g.with_order(order) for g in basis]
    if f.is_zero() or not basis:
        return f
    _, rem = _divide_terms(dict(f.terms), basis, order)
    return Polynomial.from_dict(f.ring, order, rem)


def divide_with_quotients(f: Polynomial, basis, order=None):
    """Division with quotient bookkeeping: f = sum(q_i g_i) + r exactly."""
    order = order or f.order
    f = f.with_order(order)
    basis = [g.with_order(order) for g in basis]
    quots, rem = _divide_terms(dict(f.terms), basis, order, want_quotients=True)
    ring = f.ring
    qpolys = [Polynomial.from_dict(ring, order, q) for q in quots]
    return qpolys, Polynomial.from_dict(ring, order, rem)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when division is exact."""
    if f.is_zero():
        return f
    quots, rem = divide_with_quotients(f, [g])
    if not rem.is_zero():
        raise ValueError("division is not exact")
    return quots[0]


def spoly(f: Polynomial, g: Polynomial, order) -> Polynomial:
    l = mono_lcm(f.lm(), g.lm())
    a = f.mul_term(mono_div(l, f.lm()), g.lc())
    b = g.mul_term(mono_div(l, g.lm()), f.lc())
    return a - b


# ---------------------------------------------------------------------------
# Buchberger

def buchberger(I, order=GREVLEX, strategy="normal", seed=0) -> GroebnerBasis:
    """Unique reduced Groebner basis of I.

    The pair-selection strategy ("normal", "first" or "random") does not
    change the result, only the route taken.
    """
    if isinstance(I, Ideal):
        origin, gens, ring = I, I.generators, I.ring
    else:
        gens = tuple(I)
        if not gens:
            raise ValueError("zero ideal has no Groebner basis")
        origin, ring = None, gens[0].ring
    if not gens:
        raise ValueError("zero ideal has no Groebner basis")
    basis = _buchberger_raw([g.with_order(order) for g in gens], order, strategy, seed)
    reduced = _reduce_basis(basis, order)
    return GroebnerBasis(order, tuple(reduced), origin)


def _buchberger_raw(gens, order, strategy, seed):
    field = gens[0].ring.field
    G = []
    for g in gens:
        if not g.is_zero():
            g = g.primitive()
            if g not in G:
                G.append(g)
    if not G:
        raise ValueError("zero ideal has no Groebner basis")
    rng = random.Random(seed) if strategy == "random" else None
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    key = order.key
    key_cache = {}
    while pairs:
        if strategy == "normal":
            pick = min(pairs, key=lambda p: (key(mono_lcm(G[p[0]].lm(), G[p[1]].lm())), p))
        elif strategy == "first":
            pick = min(pairs)
        elif strategy == "random":
            pick = rng.choice(sorted(pairs))
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        pairs.discard(pick)
        i, j = pick
        lmi, lmj = G[i].lm(), G[j].lm()
        if mono_coprime(lmi, lmj):
            continue
        l = mono_lcm(lmi, lmj)
        # chain criterion: some k divides the lcm and both mixed pairs are done
        skip = False
        for k in range(len(G)):
            if k in pick:
                continue
            if mono_divides(G[k].lm(), l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        _, rem = _divide_terms(dict(spoly(G[i], G[j], order).terms), G, order,
                               key_cache=key_cache)
        if rem:
            h = Polynomial.from_dict(G[0].ring, order, rem).primitive()
            G.append(h)
            new = len(G) - 1
            pairs.update((t, new) for t in range(new))
    return G


def _reduce_basis(G, order):
    key = order.key
    G = sorted(G, key=lambda g: key(g.lm()))
    kept = []
    for g in G:
        if not any(mono_divides(h.lm(), g.lm()) for h in kept):
            kept.append(g)
    reduced = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        if others:
            _, rem = _divide_terms(dict(g.terms), others, order)
            g = Polynomial.from_dict(g.ring, order, rem)
        reduced.append(g.monic())
    reduced.sort(key=lambda g: key(g.lm()))
    return reduced


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal in different rings")
    if f.is_zero():
        return True
    return I.groebner().contains(f)


def ideal_equal(I: Ideal, J: Ideal, order=GREVLEX) -> bool:
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    return I.groebner(order).elements == J.groebner(order).elements


# ---------------------------------------------------------------------------
# elimination, intersection, quotient, saturation

def _no_leading_vars(p: Polynomial, k: int) -> bool:
    zero = (0,) * k
    return all(m[:k] == zero for m, _ in p.terms)


def eliminate(I: Ideal, k: int) -> Ideal:
    """Generators of the intersection with the subring omitting the first
    k variables, via a Block-order basis."""
    gb = buchberger(I.generators, Block(k, GREVLEX))
    keep = [g.with_order(GREVLEX).primitive() for g in gb.elements if _no_leading_vars(g, k)]
    return Ideal(I.ring, keep, check=False)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J by eliminating one auxiliary variable t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    ring = I.ring
    name = "t"
    while name in ring.variables:
        name += "t"
    aux = PolynomialRing((name,) + ring.variables, ring.field)
    order = Block(1, GREVLEX)

    def lift(p):
        return Polynomial.from_dict(aux, order, {(0,) + m: c for m, c in p.terms})

    t = aux.variable(0, order)
    one = aux.one(order)
    gens = [t * lift(g) for g in I.generators]
    gens += [(one - t) * lift(h) for h in J.generators]
    gb = _buchberger_raw([g for g in gens if not g.is_zero()], order, "normal", 0)
    gb = _reduce_basis(gb, order)
    result = []
    for g in gb:
        if _no_leading_vars(g, 1):
            proj = Polynomial.from_dict(ring, GREVLEX, {m[1:]: c for m, c in g.terms})
            result.append(proj.primitive())
    out = Ideal(ring, result, check=False)
    for g in out.generators:
        if not g.is_homogeneous():
            raise AssertionError("intersection of homogeneous ideals must be homogeneous")
    return out


def quotient(I: Ideal, J: Ideal) -> Ideal:
    """Ideal quotient (I : J)."""
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    result = None
    for f in J.generators:
        part = _quotient_single(I, f)
        result = part if result is None else intersect(result, part)
    if result is None:
        raise ValueError("quotient by the zero ideal")
    return result


def _quotient_single(I: Ideal, f: Polynomial) -> Ideal:
    common = intersect(I, Ideal(I.ring, (f,), check=False))
    gens = [exact_div(g, f).primitive() for g in common.generators if not g.is_zero()]
    if not gens:
        return Ideal(I.ring, (), check=False)
    return Ideal(I.ring, gens, check=False)


def saturate(I: Ideal, J: Ideal, max_rounds=50) -> Ideal:
    """Stable quotient (I : J^infinity); paper cases stabilise in <= 3 rounds."""
    current = I
    for _ in range(max_rounds):
        nxt = quotient(current, J)
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise RuntimeError(f"saturation did not stabilise within {max_rounds} rounds")


def irrelevant_ideal(ring) -> Ideal:
    return Ideal(ring, ring.gens())


def is_saturated(I: Ideal) -> bool:
    """True iff I equals its saturation at the irrelevant maximal ideal.

    Tries single-variable quotients first; (I : x) = I for one variable
    already certifies (I : m) = I since I : m is squeezed between them.
    """
    for x in I.ring.gens():
        if ideal_equal(_quotient_single(I, x), I):
            return True
    return ideal_equal(quotient(I, irrelevant_ideal(I.ring)), I)


# ---------------------------------------------------------------------------
# module engine (rank-one case doubles as the syzygy extractor)

class ModuleOrder:
    """Schreyer order on a free module, stored in flattened form.

    Module monomials are (position, monomial) pairs.  They compare by the
    accumulated image monomial in the ring order, ties broken by the chain
    of positions down the induction, smaller positions first.
    """

    __slots__ = ("base", "totals", "chains")

    def __init__(self, base, totals, chains):
        self.base = base
        self.totals = totals
        self.chains = chains

    @staticmethod
    def rank_one(ring, order) -> "ModuleOrder":
        return ModuleOrder(order, [(0,) * ring.nvars], [(0,)])

    def induced(self, leads) -> "ModuleOrder":
        """Order induced by module leading terms (pos, mono) of this order."""
        totals = [mono_mul(lm, self.totals[lp]) for lp, lm in leads]
        chains = [self.chains[lp] + (-i,) for i, (lp, _) in enumerate(leads)]
        return ModuleOrder(self.base, totals, chains)

    def key(self, pm):
        pos, m = pm
        return (self.base.key(mono_mul(m, self.totals[pos])), self.chains[pos])


class ModElement:
    """Free-module element: dict of (position, monomial) -> coefficient."""

    __slots__ = ("terms", "lead")

    def __init__(self, terms, morder):
        self.terms = terms
        if terms:
            pm = max(terms, key=morder.key)
            self.lead = (pm[0], pm[1], terms[pm])
        else:
            self.lead = None


def _module_divide(vterms, basis, morder, field, want_quotients=False, key_cache=None):
    work = dict(vterms)
    rem = {}
    quots = [{} for _ in basis] if want_quotients else None
    cache = key_cache if key_cache is not None else {}
    raw_key = morder.key

    def key(pm):
        k = cache.get(pm)
        if k is None:
            k = raw_key(pm)
            cache[pm] = k
        return k

    while work:
        pm = max(work, key=key)
        c = work.pop(pm)
        pos, m = pm
        for bi, b in enumerate(basis):
            bpos, bm, bc = b.lead
            if bpos == pos and mono_divides(bm, m):
                q = mono_div(m, bm)
                qc = field.div(c, bc)
                if want_quotients:
                    qd = quots[bi]
                    acc = field.add(qd.get(q, field.zero), qc)
                    if field.is_zero(acc):
                        qd.pop(q, None)
                    else:
                        qd[q] = acc
                for (p2, m2), c2 in b.terms.items():
                    if p2 == pos and m2 == bm:
                        continue
                    t = (p2, mono_mul(m2, q))
                    acc = field.sub(work.get(t, field.zero), field.mul(qc, c2))
                    if field.is_zero(acc):
                        work.pop(t, None)
                    else:
                        work[t] = acc
                break
        else:
            rem[pm] = c
    return quots, rem


def schreyer_stage(basis, morder, field):
    """Syzygies of a module Groebner basis, one per same-position S-pair.

    By Schreyer's theorem the result is a Groebner basis of the syzygy
    module for the order induced by the input leading terms.
    """
    by_pos = {}
    for i, b in enumerate(basis):
        by_pos.setdefault(b.lead[0], []).append(i)
    syzygies = []
    key_cache = {}
    for pos in sorted(by_pos):
        idxs = by_pos[pos]
        for a in range(len(idxs)):
            for bix in range(a + 1, len(idxs)):
                i, j = idxs[a], idxs[bix]
                pi, mi, ci = basis[i].lead
                pj, mj, cj = basis[j].lead
                l = mono_lcm(mi, mj)
                ui, uj = mono_div(l, mi), mono_div(l, mj)
                s = {}
                inv_ci, inv_cj = field.inv(ci), field.inv(cj)
                for (p2, m2), c2 in basis[i].terms.items():
                    t = (p2, mono_mul(m2, ui))
                    acc = field.add(s.get(t, field.zero), field.mul(inv_ci, c2))
                    if field.is_zero(acc):
                        s.pop(t, None)
                    else:
                        s[t] = acc
                for (p2, m2), c2 in basis[j].terms.items():
                    t = (p2, mono_mul(m2, uj))
                    acc = field.sub(s.get(t, field.zero), field.mul(inv_cj, c2))
                    if field.is_zero(acc):
                        s.pop(t, None)
                    else:
                        s[t] = acc
                quots, rem = _module_divide(s, basis, morder, field,
                                            want_quotients=True, key_cache=key_cache)
                if rem:
                    raise AssertionError("S-pair of a Groebner basis did not reduce to zero")
                syz = {(i, ui): inv_ci, (j, uj): field.neg(inv_cj)}
                for k, qd in enumerate(quots):
                    for q, qc in qd.items():
                        t = (k, q)
                        acc = field.sub(syz.get(t, field.zero), qc)
                        if field.is_zero(acc):
                            syz.pop(t, None)
                        else:
                            syz[t] = acc
                syzygies.append(syz)
    return syzygies


@dataclass(frozen=True)
class SyzygyVector:
    """Vector of coefficients c with sum(c_k * basis_k) = 0 exactly."""

    coordinates: tuple

    def evaluate(self, basis_elements):
        total = None
        for c, g in zip(self.coordinates, basis_elements):
            term = c * g
            total = term if total is None else total + term
        return total


def schreyer_syzygies(G: GroebnerBasis):
    """Lifted syzygy vectors of the basis elements, one per S-pair.

    The vectors generate the full syzygy module of G's elements.
    """
    ring = G.ring
    field = ring.field
    morder = ModuleOrder.rank_one(ring, G.order)
    basis = [ModElement({(0, m): c for m, c in g.terms}, morder) for g in G.elements]
    raw = schreyer_stage(basis, morder, field)
    out = []
    for syz in raw:
        coords = [{} for _ in basis]
        for (k, m), c in syz.items():
            coords[k][m] = c
        polys = tuple(Polynomial.from_dict(ring, G.order, d) for d in coords)
        out.append(SyzygyVector(polys))
    return out
