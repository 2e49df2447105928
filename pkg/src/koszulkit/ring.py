"""Exact multivariate polynomials over named generator families.

A :class:`FamilyRegistry` owns two kinds of generator families: commuting
families (ordinary polynomial variables, indexed by a global integer) and odd
families (anticommuting generators that come in primal/dual pairs, indexed by
a global rank).  Registration order is significant: it fixes the canonical
sort order used everywhere else in the package, so algebra objects built over
the same registry compose without any renaming.

Polynomials are sparse: a monomial is a tuple of ``(generator_index,
exponent)`` pairs sorted by generator index with all exponents positive, and a
polynomial maps monomials to nonzero :class:`fractions.Fraction` coefficients.
All arithmetic is exact; nothing in this module (or the package) touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Mono = tuple  # tuple[tuple[int, int], ...], sorted by generator index
MONO_ONE: Mono = ()

PRIMAL = 0
DUAL = 1


class ParseError(ValueError):
    """Raised for malformed polynomial expressions."""


@dataclass(frozen=True)
class CommFamily:
    """A family of commuting generators; ``base`` is the global index of generator 1."""

    name: str
    arity: int
    base: int

    def gens(self) -> range:
        return range(self.base, self.base + self.arity)


@dataclass(frozen=True)
class OddFamily:
    """A family of paired odd generators; ``base`` is the global rank of primal 1.

    Generator i (1-based) occupies ranks ``base + 2*(i-1)`` (primal) and
    ``base + 2*(i-1) + 1`` (dual), so within a family the canonical order is
    primal 1, dual 1, primal 2, dual 2, ...
    """

    name: str
    arity: int
    base: int

    def primal_ranks(self) -> list[int]:
        return [self.base + 2 * i for i in range(self.arity)]

    def dual_ranks(self) -> list[int]:
        return [self.base + 2 * i + 1 for i in range(self.arity)]

    def owns_rank(self, rank: int) -> bool:
        return self.base <= rank < self.base + 2 * self.arity


class FamilyRegistry:
    """Append-only registry of generator families with globally unique names."""

    def __init__(self) -> None:
        self._families: dict[str, object] = {}
        self._next_index = 0
        self._next_rank = 0
        self._comm_labels: list[str] = []
        self._comm_owner: list[tuple[str, int]] = []
        self._odd_owner: list[tuple[str, int, int]] = []
        self._aux: dict[str, OddFamily] = {}

    def commuting(self, name: str, arity: int, labels: list[str] | None = None) -> CommFamily:
        """Register a commuting family and return its handle.

        ``labels`` optionally supplies display names per generator; the
        default is ``name`` for arity 1 and ``name1 .. nameN`` otherwise.
        """
        self._check_name(name, arity)
        if labels is None:
            labels = [name] if arity == 1 else [f"{name}{i}" for i in range(1, arity + 1)]
        if len(labels) != arity:
            raise ValueError(f"expected {arity} labels, got {len(labels)}")
        fam = CommFamily(name, arity, self._next_index)
        self._families[name] = fam
        self._next_index += arity
        self._comm_labels.extend(labels)
        self._comm_owner.extend((name, i) for i in range(1, arity + 1))
        return fam

    def odd(self, name: str, arity: int) -> OddFamily:
        """Register an odd family of ``arity`` primal/dual generator pairs."""
        self._check_name(name, arity)
        fam = OddFamily(name, arity, self._next_rank)
        self._families[name] = fam
        self._next_rank += 2 * arity
        for i in range(1, arity + 1):
            self._odd_owner.append((name, i, PRIMAL))
            self._odd_owner.append((name, i, DUAL))
        return fam

    def _check_name(self, name: str, arity: int) -> None:
        if not name:
            raise ValueError("family name must be nonempty")
        if name in self._families:
            raise ValueError(f"family name {name!r} already registered")
        if arity < 1:
            raise ValueError(f"family arity must be >= 1, got {arity}")

    def family(self, name: str):
        try:
            return self._families[name]
        except KeyError:
            raise KeyError(f"unknown family {name!r}") from None

    def comm_family(self, fam) -> CommFamily:
        if isinstance(fam, str):
            fam = self.family(fam)
        if not isinstance(fam, CommFamily):
            raise TypeError(f"{fam!r} is not a commuting family")
        return fam

    def odd_family(self, fam) -> OddFamily:
        if isinstance(fam, str):
            fam = self.family(fam)
        if not isinstance(fam, OddFamily):
            raise TypeError(f"{fam!r} is not an odd family")
        return fam

    def comm_gen(self, fam, i: int) -> int:
        """Global index of commuting generator ``i`` (1-based) of ``fam``."""
        fam = self.comm_family(fam)
        if not 1 <= i <= fam.arity:
            raise IndexError(f"generator index {i} out of range for {fam.name!r}")
        return fam.base + i - 1

    def comm_label(self, gidx: int) -> str:
        return self._comm_labels[gidx]

    def comm_owner(self, gidx: int) -> tuple[str, int]:
        """Family name and 1-based index owning a global commuting index."""
        return self._comm_owner[gidx]

    def odd_rank(self, fam, i: int, dual: bool = False) -> int:
        """Global rank of odd generator ``i`` (1-based), primal or dual."""
        fam = self.odd_family(fam)
        if not 1 <= i <= fam.arity:
            raise IndexError(f"generator index {i} out of range for {fam.name!r}")
        return fam.base + 2 * (i - 1) + (1 if dual else 0)

    def rank_info(self, rank: int) -> tuple[str, int, int]:
        """Family name, 1-based index and polarity of a global rank."""
        return self._odd_owner[rank]

    def odd_label(self, rank: int) -> str:
        name, i, pol = self._odd_owner[rank]
        return f"{name}*{i}" if pol == DUAL else f"{name}{i}"

    def aux_partner(self, fam) -> OddFamily:
        """A cached auxiliary odd family mirroring ``fam``, for renaming tricks.

        The tilde prefix cannot appear in parsed input, so auxiliary families
        never collide with user-registered ones.
        """
        fam = self.odd_family(fam)
        if fam.name.startswith("~"):
            raise ValueError("auxiliary families have no auxiliary partner")
        aux = self._aux.get(fam.name)
        if aux is None:
            aux = self.odd(f"~{fam.name}", fam.arity)
            self._aux[fam.name] = aux
        return aux

    def comm_label_map(self) -> dict[str, int]:
        """Display label -> global index for every commuting generator."""
        return {label: g for g, label in enumerate(self._comm_labels)}

    @property
    def num_comm(self) -> int:
        return self._next_index

    @property
    def num_ranks(self) -> int:
        return self._next_rank


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for g, e in m2:
        acc[g] = acc.get(g, 0) + e
    return tuple(sorted(acc.items()))


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_exponent(m: Mono, gidx: int) -> int:
    for g, e in m:
        if g == gidx:
            return e
    return 0


def mono_divide(m1: Mono, m2: Mono) -> Mono | None:
    """m1 / m2 as a monomial, or None when m2 does not divide m1."""
    quot = dict(m1)
    for g, e in m2:
        have = quot.get(g, 0) - e
        if have < 0:
            return None
        if have == 0:
            quot.pop(g, None)
        else:
            quot[g] = have
    return tuple(sorted(quot.items()))


def mono_lcm(m1: Mono, m2: Mono) -> Mono:
    acc = dict(m1)
    for g, e in m2:
        acc[g] = max(acc.get(g, 0), e)
    return tuple(sorted(acc.items()))


class Poly:
    """Sparse exact polynomial over a registry's commuting generators."""

    __slots__ = ("reg", "terms")

    def __init__(self, reg: FamilyRegistry, terms: dict | None = None):
        self.reg = reg
        self.terms: dict[Mono, Fraction] = terms if terms is not None else {}

    @classmethod
    def zero(cls, reg: FamilyRegistry) -> "Poly":
        return cls(reg)

    @classmethod
    def const(cls, reg: FamilyRegistry, c) -> "Poly":
        c = Fraction(c)
        return cls(reg, {MONO_ONE: c} if c else {})

    @classmethod
    def variable(cls, reg: FamilyRegistry, gidx: int) -> "Poly":
        if not 0 <= gidx < reg.num_comm:
            raise IndexError(f"no commuting generator with index {gidx}")
        return cls(reg, {((gidx, 1),): Fraction(1)})

    @classmethod
    def gen(cls, reg: FamilyRegistry, fam, i: int) -> "Poly":
        return cls.variable(reg, reg.comm_gen(fam, i))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.reg is other.reg and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == (Poly.const(self.reg, other).terms)
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> "Poly":
        return Poly(self.reg, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, Fraction(0)) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Poly(self.reg, acc)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly.zero(self.reg)
            return Poly(self.reg, {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        acc: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Poly(self.reg, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        result = Poly.const(self.reg, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.reg is not self.reg:
                raise ValueError("polynomials built over different registries")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.reg, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def total_degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, gidx: int) -> int:
        if not self.terms:
            return -1
        return max(mono_exponent(m, gidx) for m in self.terms)

    def coeff(self, m: Mono) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(MONO_ONE, Fraction(0))

    def support_gens(self) -> set[int]:
        gens: set[int] = set()
        for m in self.terms:
            gens.update(g for g, _ in m)
        return gens

    def subst(self, images: dict[int, "Poly"]) -> "Poly":
        """Substitute polynomials for generators (ring homomorphism).

        ``images`` maps global commuting indices to replacement polynomials;
        unmapped generators are left alone.
        """
        out = Poly.zero(self.reg)
        for m, c in self.terms.items():
            term = Poly.const(self.reg, c)
            for g, e in m:
                img = images.get(g)
                if img is None:
                    img = Poly.variable(self.reg, g)
                term = term * img**e
            out = out + term
        return out

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        """Terms in descending graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=_grlex_key, reverse=True)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)})"


def _grlex_key(item):
    m, _ = item
    return (mono_degree(m), tuple((-g, e) for g, e in m))


def poly_arith(op: str, p: Poly, q: Poly) -> Poly:
    """Named arithmetic entry point: op in {"add", "sub", "mul"}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic op {op!r}")


def poly_subst(p: Poly, images: dict[int, Poly]) -> Poly:
    return p.subst(images)


def render_mono(reg: FamilyRegistry, m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for g, e in m:
        label = reg.comm_label(g)
        parts.append(label if e == 1 else f"{label}^{e}")
    return "*".join(parts)


def render_poly(p: Poly) -> str:
    if p.is_zero:
        return "0"
    chunks: list[str] = []
    for m, c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not m:
            body = str(mag)
        elif mag == 1:
            body = render_mono(p.reg, m)
        else:
            body = f"{mag}*{render_mono(p.reg, m)}"
        if not chunks:
            chunks.append(body if sign == "+" else f"-{body}")
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


def divided_diff(F: Poly, xfam, yfam) -> list[Poly]:
    """Telescoping divided differences of ``F`` between two variable families.

    Returns ``[D_1, ..., D_n]`` with ``sum_k (x_k - y_k) * D_k = F(x) - F(y)``,
    where ``D_k`` is the exact quotient splitting the k-th variable: take F
    with ``x_1..x_{k-1}`` already replaced by ``y_1..y_{k-1}`` and divide out
    ``x_k - y_k`` from the ``x_k -> y_k`` difference.  Everything is exact; no
    polynomial division loop is needed because the quotient of
    ``x^a - y^a`` is ``sum_{i+j=a-1} x^i y^j`` termwise.
    """
    reg = F.reg
    xfam = reg.comm_family(xfam)
    yfam = reg.comm_family(yfam)
    if xfam.arity != yfam.arity:
        raise ValueError("divided_diff needs families of equal arity")
    if xfam.name == yfam.name:
        raise ValueError("divided_diff needs two distinct families")
    out: list[Poly] = []
    cur = F
    for k in range(1, xfam.arity + 1):
        xg = reg.comm_gen(xfam, k)
        yg = reg.comm_gen(yfam, k)
        quo: dict[Mono, Fraction] = {}
        for m, c in cur.terms.items():
            a = mono_exponent(m, xg)
            if a == 0:
                continue
            rest = tuple(pair for pair in m if pair[0] != xg)
            for i in range(a):
                extra = []
                if i:
                    extra.append((xg, i))
                if a - 1 - i:
                    extra.append((yg, a - 1 - i))
                mm = mono_mul(rest, tuple(sorted(extra)))
                s = quo.get(mm, Fraction(0)) + c
                if s:
                    quo[mm] = s
                else:
                    quo.pop(mm, None)
        out.append(Poly(reg, quo))
        cur = cur.subst({xg: Poly.variable(reg, yg)})
    return out


_OPS = set("+-*^()")


def _tokenize(text: str):
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in _OPS or ch == "/":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    """Recursive-descent parser for polynomial expressions.

    Grammar: expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
    unary := ('-'|'+')* power; power := atom ('^' INT)?;
    atom := INT ('/' INT)? | NAME | '(' expr ')'.
    """

    def __init__(self, reg: FamilyRegistry, text: str, names: dict[str, int]):
        self.reg = reg
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = names

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r} at position {tok[2]}")
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input at position {tok[2]}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Poly:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        p = self.power()
        return p if sign == 1 else -p

    def power(self) -> Poly:
        p = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("num")
            p = p ** tok[1]
        return p

    def atom(self) -> Poly:
        tok = self.take()
        kind, value, at = tok
        if kind == "num":
            if self.peek()[0] == "/":
                self.take()
                den = self.expect("num")[1]
                if den == 0:
                    raise ParseError(f"zero denominator at position {at}")
                return Poly.const(self.reg, Fraction(value, den))
            return Poly.const(self.reg, value)
        if kind == "name":
            gidx = self.names.get(value)
            if gidx is None:
                raise ParseError(f"unknown variable {value!r} at position {at}")
            return Poly.variable(self.reg, gidx)
        if kind == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token at position {at}")


def parse_poly(reg: FamilyRegistry, text: str, names: dict[str, int] | None = None) -> Poly:
    """Parse an expression over declared variable names into a Poly.

    ``names`` maps variable tokens to global commuting indices; by default it
    is the registry's display-label map.  '/' is only legal between two
    integer literals (rational constants); exponents are nonnegative integers.
    """
    if names is None:
        names = reg.comm_label_map()
    return _Parser(reg, text, names).parse()
