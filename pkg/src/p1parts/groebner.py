"""Lex Groebner bases and the ideal operations built on them.

Buchberger's algorithm with the coprime-lcm and chain criteria and
normal (smallest-lcm) pair selection, always returning the unique
minimal reduced basis, monic, sorted by increasing leading monomial.
Saturation and radical membership both ride on one mechanism: adjoin a
fresh top slot t, add 1 - t*f, eliminate.

The problem sizes this package targets are tiny, so the implementation
favors exactness and verifiability over raw speed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .poly import (
    Polynomial, _mono_div, _mono_divides, _mono_lcm, _mono_mul, exact_div,
    poly_gcd, squarefree_part,
)


@dataclass(frozen=True)
class IdealBasis:
    """A generator list, optionally certified as a reduced Groebner basis."""

    generators: tuple
    is_reduced_gb: bool = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def is_zero_ideal(self) -> bool:
        return not self.generators


def _as_gens(basis_or_gens):
    if isinstance(basis_or_gens, IdealBasis):
        return list(basis_or_gens.generators)
    return list(basis_or_gens)


def normal_form(f: Polynomial, basis_or_gens) -> Polynomial:
    """Remainder of multivariate division of f by the basis.

    Canonical (and zero exactly on ideal members) when the basis is a
    reduced Groebner basis; for arbitrary generator lists it is only some
    valid remainder.
    """
    gens = [g for g in _as_gens(basis_or_gens) if not g.is_zero()]
    if f.is_zero() or not gens:
        return f
    gens.sort(key=lambda g: g.lead_monomial())
    field = f.field
    heads = [(g.lead_monomial(), g.lead_coeff(), g.terms) for g in gens]
    work = dict(f.terms)
    out = {}
    while work:
        m = max(work)
        c = work[m]
        for lm, lc, terms in heads:
            if _mono_divides(lm, m):
                shift = _mono_div(m, lm)
                factor = field.div(c, lc)
                for mono, cg in terms.items():
                    t = _mono_mul(mono, shift)
                    v = field.sub(work.get(t, 0), field.mul(cg, factor))
                    if v:
                        work[t] = v
                    elif t in work:
                        del work[t]
                break
        else:
            out[m] = c
            del work[m]
    return Polynomial._raw(field, f.nslots, out)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    field = f.field
    lm_f, lm_g = f.lead_monomial(), g.lead_monomial()
    lcm = _mono_lcm(lm_f, lm_g)
    a = f.mul_term(_mono_div(lcm, lm_f), field.inv(f.lead_coeff()))
    b = g.mul_term(_mono_div(lcm, lm_g), field.inv(g.lead_coeff()))
    return a - b


def _autoreduce(gens):
    """Fully interreduce a list of monic polynomials (ideal unchanged)."""
    gens = [g.monic() for g in gens if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        gens.sort(key=lambda g: g.lead_monomial())
        for i, g in enumerate(gens):
            rest = gens[:i] + gens[i + 1:]
            r = normal_form(g, rest)
            if r != g:
                changed = True
                if r.is_zero():
                    gens = rest
                else:
                    gens = rest + [r.monic()]
                break
    gens.sort(key=lambda g: g.lead_monomial())
    return gens


def _unit_basis(template: Polynomial) -> IdealBasis:
    one = Polynomial.const(template.field, template.nslots, 1)
    return IdealBasis((one,), True)


def buchberger(gens) -> IdealBasis:
    """The minimal reduced lex Groebner basis of the ideal the input spans.

    The zero ideal normalizes to an empty basis and the unit ideal to the
    single generator 1.  The output is independent of the input order.
    """
    gens = [g for g in _as_gens(gens) if not g.is_zero()]
    if not gens:
        return IdealBasis((), True)
    for g in gens:
        if g.is_constant():
            return _unit_basis(g)
    G = _autoreduce(gens)
    if len(G) == 1 and G[0].is_constant():
        return _unit_basis(G[0])

    # pair queue keyed by (lcm, i, j): smallest lcm first (normal strategy)
    pairs = []
    treated = set()
    for j in range(len(G)):
        for i in range(j):
            lcm = _mono_lcm(G[i].lead_monomial(), G[j].lead_monomial())
            heapq.heappush(pairs, (lcm, i, j))
    while pairs:
        lcm, i, j = heapq.heappop(pairs)
        if (i, j) in treated:
            continue
        treated.add((i, j))
        lm_i = G[i].lead_monomial()
        lm_j = G[j].lead_monomial()
        if _mono_mul(lm_i, lm_j) == lcm:
            continue  # coprime leading monomials: S-polynomial reduces to 0
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if not _mono_divides(G[k].lead_monomial(), lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in treated and b in treated:
                skip = True  # chain criterion
                break
        if skip:
            continue
        h = normal_form(_spoly(G[i], G[j]), G)
        if h.is_zero():
            continue
        if h.is_constant():
            return _unit_basis(h)
        h = h.monic()
        G.append(h)
        new = len(G) - 1
        for k in range(new):
            lcm = _mono_lcm(G[k].lead_monomial(), h.lead_monomial())
            heapq.heappush(pairs, (lcm, k, new))

    # minimalize, then fully reduce
    G.sort(key=lambda g: g.lead_monomial())
    minimal = []
    for g in G:
        lm = g.lead_monomial()
        if not any(_mono_divides(m.lead_monomial(), lm) for m in minimal):
            minimal.append(g)
    reduced = _autoreduce(minimal)
    if len(reduced) == 1 and reduced[0].is_constant():
        return _unit_basis(reduced[0])
    return IdealBasis(tuple(reduced), True)


def elimination_subbasis(basis: IdealBasis, j: int) -> IdealBasis:
    """Generators involving only the lowest j slots.

    For a reduced lex basis this subset is a reduced basis of the
    elimination ideal (the relations among the low slots alone).
    """
    if not basis.is_reduced_gb:
        raise ValueError("elimination requires a reduced Groebner basis")
    kept = []
    for g in basis.generators:
        nslots = g.nslots
        if all(all(e == 0 for e in m[:nslots - j]) for m in g.terms):
            kept.append(g)
    return IdealBasis(tuple(kept), True)


def _extend_top(g: Polynomial) -> Polynomial:
    terms = {(0,) + m: c for m, c in g.terms.items()}
    return Polynomial._raw(g.field, g.nslots + 1, terms)


def _strip_top(g: Polynomial) -> Polynomial:
    terms = {m[1:]: c for m, c in g.terms.items()}
    return Polynomial._raw(g.field, g.nslots - 1, terms)


def _rabinowitsch_basis(gens, f: Polynomial):
    """Reduced basis of I + <1 - t*f> with a fresh slot t above all others."""
    field = f.field
    ext = [_extend_top(g) for g in gens]
    t = Polynomial.var(field, f.nslots + 1, 0)
    one = Polynomial.const(field, f.nslots + 1, 1)
    ext.append(one - t * _extend_top(f))
    return buchberger(ext)


def ideal_saturate(basis_or_gens, f: Polynomial) -> IdealBasis:
    """Reduced basis of the saturation (I : f^infinity).

    Adjoins a fresh top slot t, adds 1 - t*f, computes the lex basis and
    intersects with the original slots.
    """
    if f.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    gens = [g for g in _as_gens(basis_or_gens) if not g.is_zero()]
    ext = _rabinowitsch_basis(gens, f)
    kept = tuple(_strip_top(g) for g in ext.generators if g.degree_in(0) == 0)
    return IdealBasis(kept, True)


def principal_saturate(f: Polynomial, q: Polynomial) -> Polynomial:
    """Generator of <f> : <q>^infinity: divide out gcd(f, q) to a fixpoint."""
    if f.is_zero() or q.is_zero():
        raise ValueError("principal saturation needs nonzero polynomials")
    f = f.monic()
    while True:
        g = poly_gcd(f, q)
        if g.is_constant():
            return f
        f = exact_div(f, g).monic()


def radical_membership(f: Polynomial, basis_or_gens) -> bool:
    """True when some power of f lies in the ideal (1 in I + <1 - t*f>)."""
    gens = [g for g in _as_gens(basis_or_gens) if not g.is_zero()]
    if f.is_zero():
        return True
    ext = _rabinowitsch_basis(gens, f)
    return ext.is_unit()


def _permuted(g: Polynomial, order) -> Polynomial:
    terms = {tuple(m[p] for p in order): c for m, c in g.terms.items()}
    return Polynomial._raw(g.field, g.nslots, terms)


def _univariate_member(basis_gens, pos):
    """The unique basis element supported on one slot, if present."""
    for g in basis_gens:
        if g.occurring_slots() <= {pos}:
            return g
    return None


def _eliminant(basis: IdealBasis, pos: int):
    """Smallest univariate polynomial in the slot inside the ideal, if any.

    Read directly off the basis when a univariate generator is present
    (in a reduced basis it must then generate the elimination ideal);
    otherwise recompute the lex basis with this slot moved to the bottom.
    """
    g = _univariate_member(basis.generators, pos)
    if g is not None:
        return g
    nslots = basis.generators[0].nslots
    lowest_occurring = max(
        max(p.occurring_slots()) for p in basis.generators if not p.is_constant())
    if pos == lowest_occurring:
        return None  # for the bottom slot the basis already tells the truth
    order = [p for p in range(nslots) if p != pos] + [pos]
    inverse = [0] * nslots
    for new, old in enumerate(order):
        inverse[old] = new
    permuted = buchberger([_permuted(g, order) for g in basis.generators])
    m = _univariate_member(permuted.generators, nslots - 1)
    if m is None:
        return None
    return _permuted(m, inverse)


def heuristic_radical(basis: IdealBasis) -> IdealBasis:
    """Iterated closure towards the radical via univariate eliminants.

    For each slot with a univariate eliminant m in the ideal, adjoin the
    squarefree part of m and recompute the basis, until nothing changes.
    Slots with no univariate eliminant are skipped, so the result J only
    satisfies I <= J <= sqrt(I); that is all the callers rely on.
    """
    if not basis.is_reduced_gb:
        basis = buchberger(basis.generators)
    if basis.is_zero_ideal() or basis.is_unit():
        return basis
    while True:
        changed = False
        slots = sorted(
            {p for g in basis.generators for p in g.occurring_slots()},
            reverse=True)  # scan lowest-precedence slots first
        for pos in slots:
            m = _eliminant(basis, pos)
            if m is None or m.is_constant():
                continue
            s = squarefree_part(m)
            if normal_form(s, basis).is_zero():
                continue
            basis = buchberger(list(basis.generators) + [s])
            changed = True
            if basis.is_unit():
                return basis
        if not changed:
            return basis
