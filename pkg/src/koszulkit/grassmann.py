"""Exterior algebra over odd generator families, with Berezin contractions.

An :class:`Element` is a finite sum of wedge words with polynomial
coefficients.  A word is a strictly ascending tuple of global ranks; sorting a
generator sequence into a word picks up the parity of the permutation, and a
repeated rank kills the term.  The anchor convention for contractions: pairing
the full dual word (duals ascending) against the full primal word (primals
ascending) of one family extracts exactly +1.

``top_contract`` is the full contraction over a family: in every term the
primal and dual index sets of that family must coincide (otherwise the term
dies), matched pairs are extracted, and the other generators survive.
``bot_contract`` is the partial contraction, realized by a renaming kernel:
the family is renamed to a fresh auxiliary copy, the element is multiplied on
the right by the exponential pairing fresh primals with the original duals,
and the auxiliary family is fully contracted.  Matched pairs are traded for
scalars, unmatched duals survive (picking up the parity that restores the
interleaved normal form), and unmatched primals kill their term.

On top of the contractions sit the two determinant kernels used throughout
the package: ``bordered_det`` (a scalar matrix bordered by an odd row) and
``transgression_det`` (column differences contracted through an auxiliary
family).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ring import DUAL, PRIMAL, FamilyRegistry, OddFamily, Poly

Word = tuple  # tuple[int, ...], strictly ascending global ranks


def sort_word(seq) -> tuple[int, Word | None]:
    """Sort a rank sequence into a canonical word, returning (sign, word).

    The sign is the parity of the sorting permutation; a repeated rank returns
    (0, None).  Insertion counting keeps this simple and exact; word lengths
    in this package are small.
    """
    ranks = list(seq)
    inversions = 0
    for i in range(1, len(ranks)):
        r = ranks[i]
        j = i
        while j > 0 and ranks[j - 1] > r:
            ranks[j] = ranks[j - 1]
            j -= 1
            inversions += 1
        ranks[j] = r
        if j > 0 and ranks[j - 1] == r:
            return 0, None
    return (-1 if inversions & 1 else 1), tuple(ranks)


def merge_words(w1: Word, w2: Word) -> tuple[int, Word | None]:
    """Merge two canonical words, counting crossings; shared rank gives (0, None)."""
    out = []
    i = j = 0
    inversions = 0
    n1, n2 = len(w1), len(w2)
    while i < n1 and j < n2:
        if w1[i] == w2[j]:
            return 0, None
        if w1[i] < w2[j]:
            out.append(w1[i])
            i += 1
        else:
            out.append(w2[j])
            j += 1
            inversions += n1 - i
    out.extend(w1[i:])
    out.extend(w2[j:])
    return (-1 if inversions & 1 else 1), tuple(out)


class Element:
    """Finite sum of wedge words with exact polynomial coefficients."""

    __slots__ = ("reg", "terms")

    def __init__(self, reg: FamilyRegistry, terms: dict | None = None):
        self.reg = reg
        self.terms: dict[Word, Poly] = terms if terms is not None else {}

    @classmethod
    def zero(cls, reg: FamilyRegistry) -> "Element":
        return cls(reg)

    @classmethod
    def unit(cls, reg: FamilyRegistry) -> "Element":
        return cls(reg, {(): Poly.const(reg, 1)})

    @classmethod
    def from_poly(cls, p: Poly) -> "Element":
        return cls(p.reg, {} if p.is_zero else {(): p})

    @classmethod
    def generator(cls, reg: FamilyRegistry, rank: int) -> "Element":
        if not 0 <= rank < reg.num_ranks:
            raise IndexError(f"no odd generator with rank {rank}")
        return cls(reg, {(rank,): Poly.const(reg, 1)})

    @classmethod
    def word(cls, reg: FamilyRegistry, ranks) -> "Element":
        """Element for an arbitrary generator sequence, sorted with sign."""
        sign, w = sort_word(ranks)
        if w is None:
            return cls.zero(reg)
        return cls(reg, {w: Poly.const(reg, sign)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.reg is other.reg and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> "Element":
        return Element(self.reg, {w: -c for w, c in self.terms.items()})

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w)
            s = c if s is None else s + c
            if s.is_zero:
                acc.pop(w, None)
            else:
                acc[w] = s
        return Element(self.reg, acc)

    __radd__ = __add__

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction, Poly)):
            factor = other if isinstance(other, Poly) else Poly.const(self.reg, other)
            if factor.is_zero:
                return Element.zero(self.reg)
            return Element(self.reg, {w: c * factor for w, c in self.terms.items()})
        if not isinstance(other, Element):
            return NotImplemented
        if other.reg is not self.reg:
            raise ValueError("elements built over different registries")
        acc: dict[Word, Poly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                sign, w = merge_words(w1, w2)
                if w is None:
                    continue
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = acc.get(w)
                s = c if s is None else s + c
                if s.is_zero:
                    acc.pop(w, None)
                else:
                    acc[w] = s
        return Element(self.reg, acc)

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction, Poly)):
            return self * other
        return NotImplemented

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.reg is not self.reg:
                raise ValueError("elements built over different registries")
            return other
        if isinstance(other, (int, Fraction)):
            return Element.from_poly(Poly.const(self.reg, other))
        if isinstance(other, Poly):
            return Element.from_poly(other)
        raise TypeError(f"cannot combine Element with {type(other).__name__}")

    def scalar_part(self) -> Poly:
        return self.terms.get((), Poly.zero(self.reg))

    def support_ranks(self) -> set[int]:
        ranks: set[int] = set()
        for w in self.terms:
            ranks.update(w)
        return ranks

    def word_degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def homogeneous_degree(self) -> int | None:
        """The common word length, or None if mixed or zero."""
        degrees = self.word_degrees()
        return degrees.pop() if len(degrees) == 1 else None

    def graded_component(self, k: int) -> "Element":
        return Element(self.reg, {w: c for w, c in self.terms.items() if len(w) == k})

    def max_coeff_degree(self) -> int:
        if not self.terms:
            return -1
        return max(c.total_degree() for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Word, Poly]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"Element({render_element(self)})"


def wedge_mul(a: Element, b: Element) -> Element:
    """Wedge product; graded-commutative and associative."""
    return a * b


def render_element(e: Element) -> str:
    if e.is_zero:
        return "0"
    chunks = []
    for w, c in e.sorted_terms():
        coeff = str(c)
        if not w:
            body = f"({coeff})" if len(c.terms) > 1 else coeff
        else:
            gens = "*".join(e.reg.odd_label(r) for r in w)
            if c == Poly.const(e.reg, 1):
                body = gens
            elif c == Poly.const(e.reg, -1):
                body = f"-{gens}"
            elif len(c.terms) > 1:
                body = f"({coeff})*{gens}"
            else:
                body = f"{coeff}*{gens}"
        chunks.append(body)
    return " + ".join(chunks).replace("+ -", "- ")


def _validate_linear(e: Element, what: str) -> None:
    for w in e.terms:
        if len(w) > 1:
            raise ValueError(f"{what} must have wedge degree <= 1")


def _validate_strictly_linear(e: Element, what: str) -> None:
    for w in e.terms:
        if len(w) != 1:
            raise ValueError(f"{what} must be homogeneous of wedge degree 1 (or zero)")


def odd_row_det(entries) -> Element:
    """Determinant of a one-row matrix with degree-<=1 entries: their ordered product."""
    entries = list(entries)
    if not entries:
        raise ValueError("odd_row_det needs at least one entry")
    reg = entries[0].reg
    out = Element.unit(reg)
    for k, entry in enumerate(entries):
        _validate_linear(entry, f"odd_row_det entry {k}")
        out = out * entry
    return out


def grassmann_exp(pairs) -> Element:
    """Product of (1 + a_i ^ b_i) over pairs of degree-1 (or zero) elements.

    Each factor is the full exponential of its even nilpotent term: squares
    vanish because a ^ b ^ a ^ b = 0 for odd a, b.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("grassmann_exp needs at least one pair")
    reg = pairs[0][0].reg
    out = Element.unit(reg)
    for k, (a, b) in enumerate(pairs):
        _validate_strictly_linear(a, f"grassmann_exp pair {k} left factor")
        _validate_strictly_linear(b, f"grassmann_exp pair {k} right factor")
        out = out * (Element.unit(reg) + a * b)
    return out


def dual_full_product(reg: FamilyRegistry, fam) -> Element:
    """The full dual word of a family, duals ascending, coefficient +1."""
    fam = reg.odd_family(fam)
    return Element(reg, {tuple(fam.dual_ranks()): Poly.const(reg, 1)})


def primal_full_product(reg: FamilyRegistry, fam) -> Element:
    """The full primal word of a family, primals ascending, coefficient +1."""
    fam = reg.odd_family(fam)
    return Element(reg, {tuple(fam.primal_ranks()): Poly.const(reg, 1)})


def top_contract(fam, e: Element) -> Element:
    """Full contraction over one family.

    Per term: the family's primal and dual index sets must coincide (else the
    term vanishes); matched pairs are extracted against the +1 anchor pairing,
    generators of other families survive with the crossing sign.
    """
    reg = e.reg
    fam = reg.odd_family(fam)
    acc: dict[Word, Poly] = {}
    for word, c in e.terms.items():
        primal = set()
        dual = set()
        crossings = 0
        rest = []
        seen_fam = 0
        for pos, rank in enumerate(word):
            if fam.owns_rank(rank):
                _, idx, pol = reg.rank_info(rank)
                (primal if pol == PRIMAL else dual).add(idx)
                crossings += pos - seen_fam
                seen_fam += 1
            else:
                rest.append(rank)
        if primal != dual:
            continue
        p = len(primal)
        sign = -1 if (crossings + p * (p + 1) // 2) & 1 else 1
        w = tuple(rest)
        s = acc.get(w)
        s = sign * c if s is None else s + sign * c
        if s.is_zero:
            acc.pop(w, None)
        else:
            acc[w] = s
    return Element(reg, acc)


def bot_contract(fam, e: Element) -> Element:
    """Partial contraction: trade family primals for family duals.

    Realized by the renaming kernel: both polarities of the family are
    renamed to a fresh auxiliary copy, the renamed element is wedged on the
    right with the exponential pairing each fresh primal with the matching
    original dual, and the auxiliary family is fully contracted.  A term
    survives exactly when its family primal index set is contained in its
    dual index set; matched pairs become scalars and unmatched duals remain,
    reordered into the interleaved normal form with the corresponding parity.
    Elements carrying no generators of the family pass through unchanged.
    """
    reg = e.reg
    fam = reg.odd_family(fam)
    aux = reg.aux_partner(fam)
    if any(aux.owns_rank(r) for r in e.support_ranks()):
        raise ValueError(f"element already uses the auxiliary family {aux.name!r}")
    rename: dict[int, int] = {}
    pairs = []
    for i in range(1, fam.arity + 1):
        rename[reg.odd_rank(fam, i)] = reg.odd_rank(aux, i)
        rename[reg.odd_rank(fam, i, dual=True)] = reg.odd_rank(aux, i, dual=True)
        pairs.append(
            (
                Element.generator(reg, reg.odd_rank(aux, i)),
                Element.generator(reg, reg.odd_rank(fam, i, dual=True)),
            )
        )
    terms: dict[Word, Poly] = {}
    for word, c in e.terms.items():
        sign, w = sort_word([rename.get(r, r) for r in word])
        terms[w] = c if sign > 0 else -c
    renamed = Element(reg, terms)
    return top_contract(aux, renamed * grassmann_exp(pairs))


@dataclass
class SubstitutionKernel:
    """A substitution acting on commuting generators and primal odd generators.

    ``comm`` maps global commuting indices to polynomials; ``odd`` maps primal
    ranks to degree-1 (or zero) primal linear combinations.  Unmapped
    generators stay fixed; dual generators are never substituted.
    """

    reg: FamilyRegistry
    comm: dict[int, Poly] = field(default_factory=dict)
    odd: dict[int, Element] = field(default_factory=dict)

    def __post_init__(self):
        for g in self.comm:
            if not 0 <= g < self.reg.num_comm:
                raise ValueError(f"no commuting generator with index {g}")
        for rank, image in self.odd.items():
            _, _, pol = self.reg.rank_info(rank)
            if pol != PRIMAL:
                raise ValueError("substitution kernels act on primal odd generators only")
            _validate_strictly_linear(image, "odd generator image")
            for w in image.terms:
                if self.reg.rank_info(w[0])[2] != PRIMAL:
                    raise ValueError("odd generator image must be a primal combination")


def apply_kernel(kernel: SubstitutionKernel, e: Element) -> Element:
    """Apply a substitution kernel; a homomorphism of the whole algebra."""
    reg = e.reg
    if kernel.reg is not reg:
        raise ValueError("kernel built over a different registry")
    out = Element.zero(reg)
    for word, c in e.terms.items():
        term = Element.from_poly(c.subst(kernel.comm))
        for rank in word:
            image = kernel.odd.get(rank)
            if image is None:
                image = Element.generator(reg, rank)
            term = term * image
            if term.is_zero:
                break
        out = out + term
    return out


def compose_kernels(k1: SubstitutionKernel, k2: SubstitutionKernel) -> SubstitutionKernel:
    """The kernel acting like k1 followed by k2."""
    if k1.reg is not k2.reg:
        raise ValueError("kernels built over different registries")
    comm = {g: p.subst(k2.comm) for g, p in k1.comm.items()}
    for g, p in k2.comm.items():
        comm.setdefault(g, p)
    odd = {r: apply_kernel(k2, img) for r, img in k1.odd.items()}
    for r, img in k2.odd.items():
        odd.setdefault(r, img)
    return SubstitutionKernel(k1.reg, comm, odd)


def bordered_det(a, oddrow, rowfam) -> Element:
    """Determinant of a scalar matrix bordered below by an odd row.

    ``a`` is an s x n matrix of Poly entries, ``oddrow`` a list of n
    degree-<=1 elements, ``rowfam`` an odd family of arity s labelling the
    scalar rows.  Column k carries sum_i rowfam_i a[i][k] + oddrow[k]; the
    value is the partial contraction of the full rowfam dual word wedged with
    the ordered column product, so surviving terms trade rowfam duals against
    entries of ``oddrow``.
    """
    if not oddrow:
        raise ValueError("bordered_det needs at least one column")
    reg = oddrow[0].reg
    rowfam = reg.odd_family(rowfam)
    s = rowfam.arity
    if len(a) != s:
        raise ValueError(f"matrix has {len(a)} rows, family arity is {s}")
    n = len(oddrow)
    for row in a:
        if len(row) != n:
            raise ValueError("matrix rows and odd row must have equal length")
    cols = []
    for k in range(n):
        col = oddrow[k]
        _validate_linear(col, f"bordered_det odd entry {k}")
        for i in range(1, s + 1):
            entry = a[i - 1][k]
            if not isinstance(entry, Poly):
                entry = Poly.const(reg, entry)
            col = col + Element.generator(reg, reg.odd_rank(rowfam, i)) * entry
        cols.append(col)
    product = dual_full_product(reg, rowfam)
    for col in cols:
        product = product * col
    return bot_contract(rowfam, product)


def transgression_det(blocks, ufam) -> Element:
    """Berezin determinant of difference columns through an auxiliary family.

    ``blocks`` is a list of (grad, oddrow) pairs: grad an n x t matrix of
    Poly, oddrow a list of t degree-<=1 elements; ``ufam`` the auxiliary
    family of arity n.  The value is the full contraction over ufam of
    det(-ufam duals) wedged with the product over all columns of
    (oddrow[j] - sum_k ufam_k grad[k][j]), taken in the given order.
    """
    blocks = list(blocks)
    if not blocks:
        raise ValueError("transgression_det needs at least one block")
    reg = blocks[0][1][0].reg if blocks[0][1] else None
    for grad, oddrow in blocks:
        for e in oddrow:
            reg = e.reg
            break
        if reg is not None:
            break
    if reg is None:
        raise ValueError("transgression_det needs at least one column")
    ufam = reg.odd_family(ufam)
    n = ufam.arity
    ugens = [Element.generator(reg, reg.odd_rank(ufam, k)) for k in range(1, n + 1)]
    sign = -1 if n & 1 else 1
    product = dual_full_product(reg, ufam) * sign
    for grad, oddrow in blocks:
        t = len(oddrow)
        if len(grad) != n:
            raise ValueError(f"gradient block has {len(grad)} rows, family arity is {n}")
        for row in grad:
            if len(row) != t:
                raise ValueError("gradient block and odd row must have equal width")
        for j in range(t):
            col = oddrow[j]
            _validate_linear(col, f"transgression_det odd entry {j}")
            for k in range(n):
                entry = grad[k][j]
                if not isinstance(entry, Poly):
                    entry = Poly.const(reg, entry)
                col = col - ugens[k] * entry
            product = product * col
    return top_contract(ufam, product)
