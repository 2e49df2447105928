"""Groebner engine with cofactor tracking and quotient-ring linear algebra.

Everything downstream of a polynomial system funnels through here: a reduced
Groebner basis whose elements carry exact cofactor certificates over the
input system, the staircase basis of the quotient ring (finite exactly when
the system is zero dimensional), multiplication matrices in that basis, and
monic annihilators of each coordinate with their own cofactor certificates.

All arithmetic is exact.  Reductions scan the basis in its canonical sorted
order, pair selection uses the sugar strategy with a fixed tie break, so
every output is deterministic for a given input and monomial order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import charpoly, solve
from .ring import (
    FamilyRegistry,
    Mono,
    Poly,
    mono_degree,
    mono_divide,
    mono_exponent,
    mono_lcm,
    mono_mul,
)


class NotZeroDimensional(ValueError):
    """The quotient ring is not a finite-dimensional vector space."""


def _expvec(fam, mono: Mono) -> tuple:
    vec = [0] * fam.arity
    for g, e in mono:
        vec[g - fam.base] = e
    return tuple(vec)


def order_key(order: str, fam):
    """Key function on monomials for the supported orders."""
    if order == "grevlex":
        def key(m: Mono):
            vec = _expvec(fam, m)
            return (sum(vec), tuple(-e for e in reversed(vec)))
    elif order == "lex":
        def key(m: Mono):
            return _expvec(fam, m)
    else:
        raise ValueError(f"unknown monomial order {order!r}")
    return key


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis with cofactors: basis[k] = sum_i source[i] * cofactors[k][i]."""

    reg: FamilyRegistry
    family: str
    order: str
    source: tuple
    basis: tuple
    cofactors: tuple

    def key(self):
        return order_key(self.order, self.reg.comm_family(self.family))

    def leading_monomials(self) -> list[Mono]:
        key = self.key()
        return [max(g.terms, key=key) for g in self.basis]


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of the quotient ring, ascending in the order."""

    monomials: tuple

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self, m: Mono) -> int:
        return self.monomials.index(m)


def _leading(p: Poly, key) -> tuple[Mono, Fraction]:
    m = max(p.terms, key=key)
    return m, p.terms[m]


def _reduce(p: Poly, polys, key, sugars=None, sugar=None):
    """Divide ``p`` by the list, returning (normal form, quotients, sugar).

    Deterministic: at each step the order-largest reducible monomial of the
    remainder is cancelled against the first dividing entry of ``polys``.
    """
    reg = p.reg
    quotients = [Poly.zero(reg) for _ in polys]
    nf = Poly.zero(reg)
    h = p
    leads = [(max(g.terms, key=key), g.terms[max(g.terms, key=key)]) for g in polys]
    while not h.is_zero:
        hm, hc = _leading(h, key)
        hit = None
        for idx, (gm, gc) in enumerate(leads):
            q = mono_divide(hm, gm)
            if q is not None:
                hit = (idx, q, hc / gc)
                break
        if hit is None:
            mono_poly = Poly(reg, {hm: hc})
            nf = nf + mono_poly
            h = h - mono_poly
            continue
        idx, qmono, qc = hit
        qpoly = Poly(reg, {qmono: qc})
        quotients[idx] = quotients[idx] + qpoly
        h = h - qpoly * polys[idx]
        if sugars is not None and sugar is not None:
            sugar = max(sugar, mono_degree(qmono) + sugars[idx])
    return nf, quotients, sugar


def _system_family(f, family=None):
    reg = f[0].reg
    names = set()
    for p in f:
        for g in p.support_gens():
            names.add(reg.comm_owner(g)[0])
    if len(names) > 1:
        raise ValueError(f"polynomials span several commuting families: {sorted(names)}")
    if names:
        return reg.comm_family(names.pop())
    if family is not None:
        return reg.comm_family(family)
    raise ValueError("constant system; pass the variable family explicitly")


def groebner(f, order: str = "grevlex", family=None) -> GroebnerBasis:
    """Reduced Groebner basis of (f) with exact cofactors over f.

    Buchberger's algorithm: sugar-strategy pair selection, the coprime
    criterion, and the chain criterion (a pair is dropped when a third
    leading monomial divides its lcm and both side pairs have already left
    the queue).  Basis elements are kept monic and finally interreduced and
    sorted by leading monomial, giving a canonical result for the order.
    """
    if not f:
        raise ValueError("need at least one polynomial")
    reg = f[0].reg
    fam = _system_family(f, family)
    key = order_key(order, fam)
    s = len(f)

    polys: list[Poly] = []
    cofs: list[list[Poly]] = []
    sugars: list[int] = []

    def push(p: Poly, cof: list[Poly], sugar=None):
        lc = p.terms[max(p.terms, key=key)]
        inv = Fraction(1) / lc
        polys.append(p * inv)
        cofs.append([c * inv for c in cof])
        sugars.append(p.total_degree() if sugar is None else sugar)

    for i, p in enumerate(f):
        if p.is_zero:
            continue
        cof = [Poly.const(reg, 1 if k == i else 0) for k in range(s)]
        push(p, cof)

    pending = {(i, j) for i in range(len(polys)) for j in range(i + 1, len(polys))}

    def lead(i):
        return max(polys[i].terms, key=key)

    while pending:
        def pair_rank(pr):
            i, j = pr
            lcm = mono_lcm(lead(i), lead(j))
            ui = mono_divide(lcm, lead(i))
            uj = mono_divide(lcm, lead(j))
            sug = max(sugars[i] + mono_degree(ui), sugars[j] + mono_degree(uj))
            return (sug, key(lcm), i, j)

        i, j = min(pending, key=pair_rank)
        pending.discard((i, j))
        li, lj = lead(i), lead(j)
        lcm = mono_lcm(li, lj)
        if mono_mul(li, lj) == lcm:
            continue
        dropped = False
        for k in range(len(polys)):
            if k in (i, j):
                continue
            if mono_divide(lcm, lead(k)) is None:
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                dropped = True
                break
        if dropped:
            continue
        ui = mono_divide(lcm, li)
        uj = mono_divide(lcm, lj)
        ci = polys[i].terms[li]
        cj = polys[j].terms[lj]
        pi = Poly(reg, {ui: Fraction(1) / ci})
        pj = Poly(reg, {uj: Fraction(1) / cj})
        sp = pi * polys[i] - pj * polys[j]
        spcof = [pi * a - pj * b for a, b in zip(cofs[i], cofs[j])]
        sug = max(sugars[i] + mono_degree(ui), sugars[j] + mono_degree(uj))
        if sp.is_zero:
            continue
        nf, quots, sug = _reduce(sp, polys, key, sugars, sug)
        for q, cof in zip(quots, cofs):
            if q.is_zero:
                continue
            spcof = [a - q * b for a, b in zip(spcof, cof)]
        if nf.is_zero:
            continue
        m = len(polys)
        push(nf, spcof, sug)
        pending.update((k, m) for k in range(m))

    # minimal: drop entries whose leading monomial another one divides
    keep = []
    for i in range(len(polys)):
        li = lead(i)
        redundant = False
        for j in range(len(polys)):
            if i == j:
                continue
            q = mono_divide(li, lead(j))
            if q is not None and (q != () or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    polys = [polys[i] for i in keep]
    cofs = [cofs[i] for i in keep]

    # interreduce tails against the rest, to a fixpoint
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            others = polys[:i] + polys[i + 1 :]
            other_cofs = cofs[:i] + cofs[i + 1 :]
            nf, quots, _ = _reduce(polys[i], others, key)
            if nf != polys[i]:
                cof = cofs[i]
                for q, oc in zip(quots, other_cofs):
                    if q.is_zero:
                        continue
                    cof = [a - q * b for a, b in zip(cof, oc)]
                polys[i] = nf
                cofs[i] = cof
                changed = True

    pairs = sorted(zip(polys, cofs), key=lambda pc: key(max(pc[0].terms, key=key)))
    polys = [p for p, _ in pairs]
    cofs = [c for _, c in pairs]
    return GroebnerBasis(
        reg,
        fam.name,
        order,
        tuple(f),
        tuple(polys),
        tuple(tuple(c) for c in cofs),
    )


def reduce_with_cofactors(p: Poly, gb: GroebnerBasis) -> tuple[Poly, list[Poly]]:
    """Normal form plus quotients: p = nf + sum_k basis[k] * cof[k]."""
    if p.is_zero:
        return p, [Poly.zero(p.reg) for _ in gb.basis]
    nf, quots, _ = _reduce(p, list(gb.basis), gb.key())
    return nf, quots


def source_cofactors(gb: GroebnerBasis, quots) -> list[Poly]:
    """Convert basis quotients into cofactors over the original system."""
    reg = gb.reg
    out = [Poly.zero(reg) for _ in gb.source]
    for q, cof in zip(quots, gb.cofactors):
        if q.is_zero:
            continue
        for i, c in enumerate(cof):
            out[i] = out[i] + q * c
    return out


def quotient_basis(gb: GroebnerBasis) -> QuotientBasis:
    """Standard monomials under the leading terms; raises when infinite."""
    reg = gb.reg
    fam = reg.comm_family(gb.family)
    key = gb.key()
    leads = gb.leading_monomials()
    if any(m == () for m in leads):
        return QuotientBasis(())
    caps = []
    for g in fam.gens():
        cap = None
        for m in leads:
            if all(gg == g for gg, _ in m):
                e = mono_exponent(m, g)
                cap = e if cap is None else min(cap, e)
        if cap is None:
            raise NotZeroDimensional(
                f"no pure power of {reg.comm_label(g)} among the leading terms"
            )
        caps.append(cap)
    monos = []
    for exps in itertools.product(*[range(c) for c in caps]):
        m = tuple(
            (g, e) for g, e in zip(fam.gens(), exps) if e
        )
        if all(mono_divide(m, lm) is None for lm in leads):
            monos.append(m)
    monos.sort(key=key)
    return QuotientBasis(tuple(monos))


def mul_matrix(gb: GroebnerBasis, qb: QuotientBasis, j: int):
    """Matrix of multiplication by the j-th variable (1-based) on the quotient."""
    reg = gb.reg
    fam = reg.comm_family(gb.family)
    g = reg.comm_gen(fam, j)
    d = len(qb)
    index = {m: i for i, m in enumerate(qb.monomials)}
    mat = [[Fraction(0)] * d for _ in range(d)]
    for col, m in enumerate(qb.monomials):
        prod = Poly(reg, {mono_mul(m, ((g, 1),)): Fraction(1)})
        nf, _ = reduce_with_cofactors(prod, gb)
        for mono, c in nf.terms.items():
            mat[index[mono]][col] = c
    return mat


def _minimal_coeffs(mat) -> list[Fraction]:
    """Monic minimal polynomial of a square matrix, ascending coefficients."""
    d = len(mat)
    if d == 0:
        return [Fraction(1)]
    ident = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]

    def flatten(m):
        return [m[i][j] for i in range(d) for j in range(d)]

    cur = ident
    seen = [flatten(cur)]
    for degree in range(1, d + 1):
        nxt = [[sum((mat[i][k] * cur[k][j] for k in range(d)), Fraction(0)) for j in range(d)] for i in range(d)]
        target = flatten(nxt)
        cols = list(zip(*seen))
        system = [list(row) for row in cols]
        sol = solve(system, target)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        seen.append(target)
        cur = nxt
    raise AssertionError("no annihilator up to the matrix dimension")


def charpoly_T(gb: GroebnerBasis, j: int, mode: str = "char") -> tuple[Poly, list[Poly]]:
    """Monic annihilator T of the j-th coordinate plus cofactors over the source.

    ``mode='char'`` (default) takes the characteristic polynomial of the
    multiplication matrix, degree = quotient dimension; ``mode='minimal'``
    takes its minimal polynomial.  Either way T(x_j) lies in the ideal and
    the returned list G satisfies T(x_j) = sum_i source[i] * G[i] exactly.
    """
    reg = gb.reg
    fam = reg.comm_family(gb.family)
    qb = quotient_basis(gb)
    mat = mul_matrix(gb, qb, j)
    if mode == "char":
        coeffs = charpoly(mat)
    elif mode == "minimal":
        coeffs = _minimal_coeffs(mat)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    g = reg.comm_gen(fam, j)
    T = Poly(reg, {(() if k == 0 else ((g, k),)): c for k, c in enumerate(coeffs) if c})
    nf, quots = reduce_with_cofactors(T, gb)
    if not nf.is_zero:
        raise AssertionError("annihilator does not reduce to zero")
    return T, source_cofactors(gb, quots)
