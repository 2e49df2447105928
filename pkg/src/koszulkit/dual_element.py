"""Recurrent dual functionals and the constructive duality pipeline.

A zero-dimensional system f pins down, for each variable, a monic annihilator
T_j with cofactors G expressing T_j(x_j) over f.  The recurrence encoded by
T_j determines a linear functional l_j on one-variable polynomials from d_j
initial values; the product functional l pairs monomials coordinatewise.
Wedging dual words of the system's odd family onto such functionals gives the
dual-side elements this module manipulates: the distinguished cocycle e built
from the bordered determinant of G, and the pairing of e against the
transgression determinant, which must come out equal or homotopic to 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .grassmann import (
    Element,
    bordered_det,
    grassmann_exp,
    merge_words,
    render_element,
    top_contract,
    transgression_det,
)
from .koszul import (
    BoundaryAssignment,
    ComplexElement,
    IdentityReport,
    boundary,
    homotopy_witness,
    transport,
    _family_gmap,
)
from .quotient import NotZeroDimensional, charpoly_T, groebner, quotient_basis
from .ring import FamilyRegistry, Poly, divided_diff


class HypothesisError(ValueError):
    """A stated hypothesis (for example F = f.G) fails on the given input."""


@dataclass
class Functional1D:
    """Linear functional on polynomials in one variable, given by a monic
    recurrence plus initial values.

    ``rec`` holds the non-leading coefficients a_0..a_{d-1} of the monic
    annihilator; evaluation beyond the initial segment follows
    eval(d + k) = -sum_i a_i * eval(i + k).
    """

    gidx: int
    rec: tuple
    initials: tuple
    _memo: list = field(default_factory=list)

    def __post_init__(self):
        if len(self.initials) != len(self.rec):
            raise ValueError("need exactly one initial value per recurrence order")
        self.rec = tuple(Fraction(c) for c in self.rec)
        self.initials = tuple(Fraction(c) for c in self.initials)
        self._memo = list(self.initials)

    @property
    def degree(self) -> int:
        return len(self.rec)

    def eval(self, k: int) -> Fraction:
        d = self.degree
        if d == 0:
            return Fraction(0)
        memo = self._memo
        while len(memo) <= k:
            base = len(memo) - d
            memo.append(-sum((self.rec[i] * memo[base + i] for i in range(d)), Fraction(0)))
        return memo[k]

    def signature(self):
        return (self.gidx, self.rec, self.initials)


def recurrent_functional(T: Poly, initials) -> Functional1D:
    """Functional determined by a monic one-variable polynomial and initials."""
    gens = T.support_gens()
    if len(gens) > 1:
        raise ValueError("annihilator must involve a single variable")
    d = T.total_degree()
    gidx = gens.pop() if gens else None
    coeffs = [Fraction(0)] * d
    lead = Fraction(0)
    for mono, c in T.terms.items():
        k = mono[0][1] if mono else 0
        if k == d:
            lead = c
        else:
            coeffs[k] = c
    if lead != 1:
        raise ValueError("annihilator must be monic")
    if len(initials) != d:
        raise ValueError(f"need {d} initial values, got {len(initials)}")
    return Functional1D(gidx if gidx is not None else -1, tuple(coeffs), tuple(initials))


@dataclass
class ProductFunctional:
    """One functional per variable of a commuting family; monomials pair
    coordinatewise and values multiply."""

    reg: FamilyRegistry
    family: str
    funcs: tuple

    def __post_init__(self):
        fam = self.reg.comm_family(self.family)
        if len(self.funcs) != fam.arity:
            raise ValueError("need one functional per variable")
        self.funcs = tuple(self.funcs)
        self._slot = {f.gidx: f for f in self.funcs}

    def eval_mono(self, mono) -> Fraction:
        val = Fraction(1)
        seen = set()
        for g, e in mono:
            func = self._slot.get(g)
            if func is None:
                raise ValueError("monomial leaves the paired family")
            val *= func.eval(e)
            seen.add(g)
        for f in self.funcs:
            if f.gidx not in seen:
                val *= f.eval(0)
        return val

    def eval_poly(self, p: Poly) -> Fraction:
        return sum((c * self.eval_mono(m) for m, c in p.terms.items()), Fraction(0))

    def signature(self):
        return (self.family, tuple(f.signature() for f in self.funcs))


@dataclass
class FunctionalElement:
    """Sum of dual words with polynomial multipliers over one product
    functional: sum_w m_w(x) * l(x_*) (x) word_w.

    The multipliers act adjointly (partial contraction over a commuting
    family is multiplication on the functional side), so the boundary and
    the zero test never leave this finite description.
    """

    functional: ProductFunctional
    odd_family: str
    comps: dict
    cocycle: bool | None = None

    def __post_init__(self):
        clean = {}
        for w, m in self.comps.items():
            if not m.is_zero:
                clean[tuple(w)] = m
        self.comps = clean

    @property
    def reg(self) -> FamilyRegistry:
        return self.functional.reg

    def __eq__(self, other) -> bool:
        if not isinstance(other, FunctionalElement):
            return NotImplemented
        return (
            self.odd_family == other.odd_family
            and self.functional.signature() == other.functional.signature()
            and self.comps == other.comps
        )

    def boundary(self, ba: BoundaryAssignment) -> "FunctionalElement":
        """Dual-side boundary: left multiplication by minus the image row."""
        reg = self.reg
        fam = reg.odd_family(self.odd_family)
        out: dict[tuple, Poly] = {}
        for w, m in self.comps.items():
            for i in range(1, fam.arity + 1):
                rank = reg.odd_rank(fam, i, dual=True)
                if rank in w:
                    continue
                pos = sum(1 for r in w if r < rank)
                word = tuple(sorted(w + (rank,)))
                piece = ba.image(fam.name, i) * m
                if pos & 1:
                    piece = -piece
                piece = -piece
                s = out.get(word)
                s = piece if s is None else s + piece
                if s.is_zero:
                    out.pop(word, None)
                else:
                    out[word] = s
        return FunctionalElement(self.functional, self.odd_family, out)

    def is_zero(self) -> bool:
        """Exact zero test on the finite evaluation box.

        For each word the combined multiplier m gives a function
        g(alpha) = l.(m x^alpha) satisfying the per-coordinate recurrences
        beyond degree d_j + deg_j(m); vanishing on the box below that (plus a
        one-step margin) forces the whole functional to vanish.
        """
        fam = self.reg.comm_family(self.functional.family)
        for m in self.comps.values():
            ranges = []
            for func in self.functional.funcs:
                ranges.append(range(func.degree + m.degree_in(func.gidx) + 1))
            for alpha in itertools.product(*ranges):
                val = Fraction(0)
                for mono, c in m.terms.items():
                    exps = dict(mono)
                    term = c
                    for func, a in zip(self.functional.funcs, alpha):
                        term *= func.eval(exps.get(func.gidx, 0) + a)
                    val += term
                if val:
                    return False
        return True

    def pair_poly(self, p: Poly) -> Fraction:
        """Pairing of the word-free part against a polynomial."""
        m = self.comps.get(())
        if m is None:
            return Fraction(0)
        return self.functional.eval_poly(m * p)


def adjoint_mult(p: Poly, F: FunctionalElement) -> FunctionalElement:
    """Multiplication acting through the functional: multipliers pick up p."""
    return FunctionalElement(
        F.functional, F.odd_family, {w: p * m for w, m in F.comps.items()}
    )


def functional_eval(F: FunctionalElement, e: Element) -> Element:
    """Pair an element against a functional element.

    Per component the element is wedged on the right with the dual word, the
    odd family is fully contracted, and the paired commuting variables are
    evaluated through the product functional (with the multiplier folded in);
    whatever generators remain pass through untouched.
    """
    reg = e.reg
    fam = reg.comm_family(F.functional.family)
    famset = set(fam.gens())
    ofam = reg.odd_family(F.odd_family)
    out = Element.zero(reg)
    for w, m in F.comps.items():
        contracted = top_contract(ofam, e * Element.word(reg, w))
        for word, coeff in contracted.terms.items():
            acc: dict = {}
            for mono, c in (coeff * m).terms.items():
                paired = tuple((g, x) for g, x in mono if g in famset)
                rest = tuple((g, x) for g, x in mono if g not in famset)
                val = c * F.functional.eval_mono(paired)
                if not val:
                    continue
                s = acc.get(rest, Fraction(0)) + val
                if s:
                    acc[rest] = s
                else:
                    acc.pop(rest, None)
            if acc:
                out = out + Element(reg, {word: Poly(reg, acc)})
    return out


# ---------------------------------------------------------------------------
# the constructive pipeline


def _pipeline_registry(n: int, s: int) -> FamilyRegistry:
    reg = FamilyRegistry()
    reg.commuting("x", n)
    reg.commuting("y", n)
    reg.odd("fx", s)
    reg.odd("fy", s)
    reg.odd("Fx", n)
    reg.odd("Fy", n)
    reg.odd("u", n)
    return reg


def _kernel_image(Gmat, L: FunctionalElement, fxfam, Fxfam) -> FunctionalElement:
    """Apply the bordered-determinant kernel of G to a functional element.

    Computes the partial contraction over the commuting family of the full
    contraction over ``Fxfam`` of det(G bordered by -Fx row) times L: the
    full contraction against L's empty-word functional keeps exactly the
    terms free of ``Fxfam``, and the commuting contraction attaches
    multipliers adjointly.
    """
    reg = L.reg
    Fxfam = reg.odd_family(Fxfam)
    oddrow = [
        -Element.generator(reg, reg.odd_rank(Fxfam, j))
        for j in range(1, Fxfam.arity + 1)
    ]
    bd = bordered_det(Gmat, oddrow, fxfam)
    comps: dict[tuple, Poly] = {}
    for w, c in bd.terms.items():
        if any(Fxfam.owns_rank(r) for r in w):
            continue
        for wl, ml in L.comps.items():
            word = w
            mult = c * ml
            if wl:
                sign, merged = merge_words(word, wl)
                if merged is None:
                    continue
                word = merged
                if sign < 0:
                    mult = -mult
            s = comps.get(word)
            s = mult if s is None else s + mult
            comps[word] = s
    return FunctionalElement(L.functional, L.odd_family, comps)


def dual_element(f, mode: str = "char"):
    """The distinguished dual cocycle of a zero-dimensional system.

    Returns (e, certificate).  The certificate carries the annihilators T_j,
    the cofactor matrix G with T_j(x_j) = sum_i f_i G[i][j], the functional
    initial values, and the quotient dimension.  Both stated forms of e (the
    full kernel route through the auxiliary odd family and the direct
    bordered determinant of G) are computed and must agree; the boundary of
    e is checked exactly and recorded on ``e.cocycle``.
    """
    if not f:
        raise ValueError("need at least one polynomial")
    src = f[0].reg
    n, s = src.num_comm, len(f)
    reg = _pipeline_registry(n, s)
    xmap = _family_gmap(src, reg, "x")
    fX = [transport(p, reg, xmap) for p in f]
    gb = groebner(fX, family="x")
    qb = quotient_basis(gb)
    d = len(qb)
    T = []
    Gcols = []
    funcs = []
    for j in range(1, n + 1):
        Tj, Gj = charpoly_T(gb, j, mode=mode)
        T.append(Tj)
        Gcols.append(Gj)
        dj = Tj.total_degree()
        initials = tuple([Fraction(0)] * (dj - 1) + [Fraction(1)]) if dj else ()
        func = recurrent_functional(Tj, initials)
        if func.gidx < 0:
            func.gidx = reg.comm_gen("x", j)
        funcs.append(func)
    Gmat = [[Gcols[j][i] for j in range(n)] for i in range(s)]
    l = ProductFunctional(reg, "x", funcs)
    L = FunctionalElement(l, "fx", {(): Poly.const(reg, 1)})

    e = _kernel_image(Gmat, L, reg.odd_family("fx"), "Fx")
    direct = bordered_det(Gmat, [Element.zero(reg)] * n, reg.odd_family("fx"))
    e_direct = FunctionalElement(l, "fx", dict(direct.terms))
    if e != e_direct:
        raise AssertionError("the two stated forms of the dual element disagree")

    ba = BoundaryAssignment(reg, {"fx": fX})
    e.cocycle = e.boundary(ba).is_zero()
    certificate = {
        "dimension": d,
        "annihilators": T,
        "cofactors": Gmat,
        "initials": [list(func.initials) for func in funcs],
        "order": gb.order,
    }
    return e, certificate


def _transport_functional_to_y(e: FunctionalElement) -> FunctionalElement:
    reg = e.reg
    xfam = reg.comm_family("x")
    yfam = reg.comm_family("y")
    fx = reg.odd_family("fx")
    fy = reg.odd_family("fy")
    gmap = {xfam.base + k: yfam.base + k for k in range(xfam.arity)}
    rename = {}
    for i in range(1, fx.arity + 1):
        rename[reg.odd_rank(fx, i, dual=True)] = reg.odd_rank(fy, i, dual=True)
    funcs = [
        Functional1D(gmap[func.gidx], func.rec, func.initials) for func in e.functional.funcs
    ]
    ly = ProductFunctional(reg, "y", funcs)
    comps = {
        tuple(rename[r] for r in w): transport(m, reg, gmap) for w, m in e.comps.items()
    }
    return FunctionalElement(ly, "fy", comps)


def transgression_pairing(f, e: FunctionalElement) -> Element:
    """P = the pairing of e (moved to the y side) against the transgression
    determinant of f; an element over x and the system's odd family."""
    reg = e.reg
    src = f[0].reg
    xmap = _family_gmap(src, reg, "x")
    fX = [transport(p, reg, xmap) for p in f]
    n = reg.comm_family("x").arity
    s = len(f)
    grad = [[None] * s for _ in range(n)]
    for j, p in enumerate(fX):
        col = divided_diff(p, "x", "y")
        for k in range(n):
            grad[k][j] = col[k]
    fx = reg.odd_family("fx")
    fy = reg.odd_family("fy")
    diffs = [
        Element.generator(reg, reg.odd_rank(fx, i)) - Element.generator(reg, reg.odd_rank(fy, i))
        for i in range(1, s + 1)
    ]
    tdet = transgression_det([(grad, diffs)], "u")
    ey = _transport_functional_to_y(e)
    return functional_eval(ey, tdet)


def pair_transgression(f, e: FunctionalElement, bound=None) -> IdentityReport:
    """Verdict on the pairing against 1: equal, homotopic with witness, or
    not found within the degree bound."""
    reg = e.reg
    P = transgression_pairing(f, e)
    unit = Element.unit(reg)
    if P == unit:
        return IdentityReport("theorem4.pairing", "", "equal")
    src = f[0].reg
    xmap = _family_gmap(src, reg, "x")
    fX = [transport(p, reg, xmap) for p in f]
    ba = BoundaryAssignment(reg, {"fx": fX})
    if bound is None:
        bound = P.max_coeff_degree() + sum(func.degree for func in e.functional.funcs) + 1
    w = homotopy_witness(P, unit, ba, degree_bound=bound)
    if w is None:
        return IdentityReport(
            "theorem4.pairing",
            "",
            "not_found",
            detail=f"pairing {render_element(P)}; no witness within degree {bound}",
        )
    return IdentityReport("theorem4.pairing", "", "homotopic", witness=w)


def verify_theorem4(f, bound=None, instance: str = ""):
    """Full pipeline: dual element, cocycle check, pairing verdict.

    Returns (reports, e, certificate).
    """
    e, certificate = dual_element(f)
    cocycle = IdentityReport(
        "theorem4.cocycle",
        instance,
        "equal" if e.cocycle else "failed",
        detail=None if e.cocycle else "boundary of e does not vanish",
    )
    pairing = pair_transgression(f, e, bound=bound)
    pairing.instance = instance
    return [cocycle, pairing], e, certificate


# ---------------------------------------------------------------------------
# embedded systems


def theorem3_compare(f, F, G, bound=None, functional=None) -> IdentityReport:
    """Exactness and homotopy comparison for an embedded system F = f.G.

    Checks the stated equality between the contraction of the exponential
    kernel against the transgression determinant of F and the mixed-column
    determinant; the two cocycle facts; and the homotopy claim relating the
    mixed determinant to the pairing through f's transgression, producing a
    verified witness when the sides differ.  ``G`` is an s x t matrix over
    the same variables as f.  When ``functional`` is given (a functional
    element over this module's pipeline registry), the kernel image of G
    against it is also required to be a cocycle.
    """
    if not f or not F:
        raise ValueError("need nonempty systems")
    src = f[0].reg
    n, s, t = src.num_comm, len(f), len(F)
    if len(G) != s or any(len(row) != t for row in G):
        raise ValueError("cofactor matrix shape must be s x t")
    for j in range(t):
        acc = Poly.zero(src)
        for i in range(s):
            gij = G[i][j]
            if not isinstance(gij, Poly):
                gij = Poly.const(src, gij)
            acc = acc + f[i] * gij
        if acc != F[j]:
            raise HypothesisError(f"F[{j}] does not equal sum_i f_i G[i][{j}]")

    reg = FamilyRegistry()
    reg.commuting("x", n)
    reg.commuting("y", n)
    fx = reg.odd("fx", s)
    fy = reg.odd("fy", s)
    Fx = reg.odd("Fx", t)
    Fy = reg.odd("Fy", t)
    reg.odd("u", n)
    xmap = _family_gmap(src, reg, "x")
    ymap = _family_gmap(src, reg, "y")
    fX = [transport(p, reg, xmap) for p in f]
    FX = [transport(p, reg, xmap) for p in F]
    fY = [transport(p, reg, ymap) for p in f]
    FY = [transport(p, reg, ymap) for p in F]
    GX = [[transport(G[i][j], reg, xmap) if isinstance(G[i][j], Poly) else Poly.const(reg, G[i][j]) for j in range(t)] for i in range(s)]
    GY = [[transport(G[i][j], reg, ymap) if isinstance(G[i][j], Poly) else Poly.const(reg, G[i][j]) for j in range(t)] for i in range(s)]

    def gradient(polys):
        grad = [[None] * len(polys) for _ in range(n)]
        for j, p in enumerate(polys):
            col = divided_diff(p, "x", "y")
            for k in range(n):
                grad[k][j] = col[k]
        return grad

    def gen(fam, i, dual=False):
        return Element.generator(reg, reg.odd_rank(fam, i, dual=dual))

    gradF = gradient(FX)
    gradf = gradient(fX)
    fxG = []
    for j in range(t):
        col = Element.zero(reg)
        for i in range(s):
            col = col + gen(fx, i + 1) * GX[i][j]
        fxG.append(col)

    pairs = [(fxG[j], gen(Fx, j + 1, dual=True)) for j in range(t) if not fxG[j].is_zero]
    Fdiff = [gen(Fx, j + 1) - gen(Fy, j + 1) for j in range(t)]
    tdetF = transgression_det([(gradF, Fdiff)], "u")
    kernel = grassmann_exp(pairs) if pairs else Element.unit(reg)
    lhs_a = top_contract(Fx, kernel * tdetF)
    mixed = [fxG[j] - gen(Fy, j + 1) for j in range(t)]
    rhs_a = transgression_det([(gradF, mixed)], "u")
    parts = []
    if lhs_a != rhs_a:
        parts.append("kernel contraction differs from the mixed determinant")

    ba = BoundaryAssignment(reg, {"fx": fX, "fy": fY, "Fx": FX, "Fy": FY})
    if not boundary(ba, ComplexElement(rhs_a)).element.is_zero:
        parts.append("mixed determinant is not closed")
    bb = bordered_det(GY, [-gen(Fy, j + 1) for j in range(t)], fy)
    if not boundary(ba, ComplexElement(bb, frozenset({"fy"}))).element.is_zero:
        parts.append("bordered determinant is not closed")

    if functional is not None:
        freg = functional.reg
        ffx = freg.odd_family(functional.odd_family)
        if ffx.arity != s:
            raise ValueError("functional's odd family does not match the system size")
        fFx = freg.odd_family("Fx")
        if fFx.arity != t:
            raise ValueError("functional registry's auxiliary family does not match F")
        fmap = _family_gmap(src, freg, "x")
        GF = [
            [
                transport(G[i][j], freg, fmap)
                if isinstance(G[i][j], Poly)
                else Poly.const(freg, G[i][j])
                for j in range(t)
            ]
            for i in range(s)
        ]
        img = _kernel_image(GF, functional, ffx, fFx)
        fba = BoundaryAssignment(freg, {ffx.name: [transport(p, freg, fmap) for p in f]})
        if not img.boundary(fba).is_zero():
            parts.append("kernel image of the supplied functional is not closed")

    if parts:
        return IdentityReport("theorem3", "", "failed", detail="; ".join(parts))

    fdiffs = [gen(fx, i + 1) - gen(fy, i + 1) for i in range(s)]
    tdetf = transgression_det([(gradf, fdiffs)], "u")
    cform = top_contract(fy, tdetf * bb)
    if rhs_a == cform:
        return IdentityReport("theorem3", "", "equal")
    wba = BoundaryAssignment(reg, {"fx": fX, "Fy": FY})
    if bound is None:
        bound = max(rhs_a.max_coeff_degree(), cform.max_coeff_degree(), 0) + 4
    w = homotopy_witness(rhs_a, cform, wba, degree_bound=bound)
    if w is None:
        return IdentityReport(
            "theorem3",
            "",
            "not_found",
            detail=f"difference {render_element(rhs_a - cform)}; no witness within degree {bound}",
        )
    return IdentityReport("theorem3", "", "homotopic", witness=w)
