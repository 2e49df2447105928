"""Tests for wedge words, contractions, kernels and determinant constructions.

Oracles, defined before anything that uses them:

- permutation parity by direct pair counting (for word sorting and merging);
- brute-force subset expansion for the Grassmann exponential;
- the classic Leibniz determinant for the square cases of bordered_det and
  transgression_det.
"""

import itertools
import random
from fractions import Fraction

import pytest

from koszulkit.grassmann import (
    Element,
    SubstitutionKernel,
    apply_kernel,
    bordered_det,
    bot_contract,
    compose_kernels,
    dual_full_product,
    grassmann_exp,
    merge_words,
    odd_row_det,
    primal_full_product,
    render_element,
    sort_word,
    top_contract,
    transgression_det,
    wedge_mul,
)
from koszulkit.ring import FamilyRegistry, Poly, divided_diff


def parity_oracle(seq):
    """(-1)^inversions by direct double loop; None for a repeat."""
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return None
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def det_oracle(m):
    """Leibniz determinant over Fraction."""
    n = len(m)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = parity_oracle(perm)
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def setup_fg(arity_f=2, arity_g=2, nvars=2):
    reg = FamilyRegistry()
    x = reg.commuting("x", nvars)
    f = reg.odd("f", arity_f)
    g = reg.odd("g", arity_g)
    return reg, x, f, g


def rand_element(rng, reg, ranks, gens, max_terms=4, max_deg=2):
    e = Element.zero(reg)
    for _ in range(rng.randrange(max_terms + 1)):
        k = rng.randrange(min(len(ranks), 3) + 1)
        word = rng.sample(ranks, k)
        coeff = Poly.const(reg, rng.randint(-3, 3))
        for _ in range(rng.randrange(max_deg + 1)):
            coeff = coeff * Poly.variable(reg, rng.choice(gens))
        e = e + Element.word(reg, word) * coeff
    return e


class TestWordOps:
    def test_sort_word_matches_parity_oracle(self):
        rng = random.Random(20001)
        for _ in range(300):
            n = rng.randrange(7)
            seq = [rng.randrange(8) for _ in range(n)]
            sign, word = sort_word(seq)
            expected = parity_oracle(seq)
            if expected is None:
                assert sign == 0 and word is None
            else:
                assert sign == expected
                assert word == tuple(sorted(seq))

    def test_merge_words_matches_parity_oracle(self):
        rng = random.Random(20002)
        for _ in range(300):
            pool = list(range(10))
            rng.shuffle(pool)
            k1, k2 = rng.randrange(5), rng.randrange(5)
            w1 = tuple(sorted(pool[:k1]))
            w2 = tuple(sorted(rng.sample(range(10), k2)))
            sign, word = merge_words(w1, w2)
            expected = parity_oracle(list(w1) + list(w2))
            if expected is None:
                assert sign == 0 and word is None
            else:
                assert sign == expected
                assert word == tuple(sorted(w1 + w2))


class TestWedge:
    def test_generators_anticommute(self):
        reg, _, f, _ = setup_fg()
        a = Element.generator(reg, f.primal_ranks()[0])
        b = Element.generator(reg, f.primal_ranks()[1])
        assert a * b == -(b * a)
        assert (a * a).is_zero
        assert (wedge_mul(a, b) + wedge_mul(b, a)).is_zero

    def test_graded_commutativity_random(self):
        rng = random.Random(20003)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        for _ in range(100):
            ka = rng.randrange(4)
            kb = rng.randrange(4)
            a = Element.word(reg, rng.sample(ranks, ka)) * Poly.const(reg, rng.randint(-3, 3))
            b = Element.word(reg, rng.sample(ranks, kb)) * Poly.const(reg, rng.randint(-3, 3))
            sign = -1 if (ka * kb) % 2 else 1
            assert a * b == (b * a) * sign

    def test_associativity_and_distributivity_random(self):
        rng = random.Random(20004)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        for _ in range(60):
            a = rand_element(rng, reg, ranks, gens)
            b = rand_element(rng, reg, ranks, gens)
            c = rand_element(rng, reg, ranks, gens)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert Element.unit(reg) * a == a

    def test_poly_coefficients_are_central(self):
        reg, x, f, _ = setup_fg()
        p = Poly.gen(reg, x, 1) + 2
        a = Element.generator(reg, f.primal_ranks()[0])
        b = Element.generator(reg, f.dual_ranks()[1])
        assert (a * p) * b == p * (a * b)
        assert a * (p * b) == (p * a) * b


class TestTopContract:
    def test_anchor_dual_then_primal_is_plus_one(self):
        """The calibration: <duals ascending ^ primals ascending> = +1, any arity."""
        for s in (1, 2, 3, 4):
            reg = FamilyRegistry()
            f = reg.odd("f", s)
            e = dual_full_product(reg, f) * primal_full_product(reg, f)
            assert top_contract(f, e) == Element.unit(reg)

    def test_interleaved_pair_word_value(self):
        """(p1 d1 p2 d2 ... pk dk) contracts to (-1)^(k(k+1)/2)."""
        for s in (1, 2, 3, 4):
            reg = FamilyRegistry()
            f = reg.odd("f", s)
            word = tuple(range(2 * s))
            e = Element(reg, {word: Poly.const(reg, 1)})
            expected = -1 if (s * (s + 1) // 2) % 2 else 1
            assert top_contract(f, e) == Element.unit(reg) * expected

    def test_unmatched_terms_die(self):
        reg, _, f, g = setup_fg()
        only_primal = Element.generator(reg, f.primal_ranks()[0])
        only_dual = Element.generator(reg, f.dual_ranks()[1])
        assert top_contract(f, only_primal).is_zero
        assert top_contract(f, only_dual).is_zero
        mixed = Element.word(reg, [f.primal_ranks()[0], f.dual_ranks()[1]])
        assert top_contract(f, mixed).is_zero

    def test_unit_passes_through(self):
        reg, _, f, _ = setup_fg()
        assert top_contract(f, Element.unit(reg)) == Element.unit(reg)

    def test_pinned_mixed_family_example(self):
        """top_f[f*1 ^ (f1 - b g1)] = 1: the matched pair pays +1, the g term dies."""
        reg = FamilyRegistry()
        b = reg.commuting("b", 1)
        f = reg.odd("f", 1)
        g = reg.odd("g", 1)
        beta = Poly.gen(reg, b, 1)
        e = Element.generator(reg, f.dual_ranks()[0]) * (
            Element.generator(reg, f.primal_ranks()[0])
            - Element.generator(reg, g.primal_ranks()[0]) * beta
        )
        assert top_contract(f, e) == Element.unit(reg)

    def test_module_map_over_other_families(self):
        rng = random.Random(20005)
        reg, x, f, g = setup_fg()
        franks = [r for r in range(reg.num_ranks) if f.owns_rank(r)]
        granks = [r for r in range(reg.num_ranks) if g.owns_rank(r)]
        gens = list(x.gens())
        for _ in range(60):
            a = rand_element(rng, reg, franks + granks, gens)
            b = rand_element(rng, reg, granks, gens)
            assert top_contract(f, a * b) == top_contract(f, a) * b
            assert top_contract(f, b * a) == b * top_contract(f, a)

    def test_contractions_over_distinct_families_commute(self):
        rng = random.Random(20006)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        for _ in range(60):
            e = rand_element(rng, reg, ranks, gens)
            assert top_contract(f, top_contract(g, e)) == top_contract(g, top_contract(f, e))


class TestBotContract:
    def test_identity_on_family_free_elements(self):
        rng = random.Random(20007)
        reg, x, f, g = setup_fg()
        granks = [r for r in range(reg.num_ranks) if g.owns_rank(r)]
        gens = list(x.gens())
        for _ in range(60):
            e = rand_element(rng, reg, granks, gens)
            assert bot_contract(f, e) == e

    def test_surviving_duals_pick_up_normal_form_parity(self):
        """A word of d unmatched duals comes back scaled by (-1)^(d(d-1)/2)."""
        reg = FamilyRegistry()
        f = reg.odd("f", 3)
        for d in range(4):
            for idxs in itertools.combinations((1, 2, 3), d):
                w = Element.word(reg, [reg.odd_rank(f, i, dual=True) for i in idxs])
                twist = -1 if (d * (d - 1) // 2) & 1 else 1
                assert bot_contract(f, w) == w * twist

    def test_exponential_kernel_identity_rank_two(self):
        """bot_f[f*1 f*2 ^ (f1 - b1 g1)(f2 - b2 g2)] = exp(b1 g1 f*1 + b2 g2 f*2).

        This is the arity-2 calibration: the cross terms fix the parity that a
        surviving dual picks up while passing the matched pairs.
        """
        reg = FamilyRegistry()
        b = reg.commuting("b", 2)
        f = reg.odd("f", 2)
        g = reg.odd("g", 2)
        b1, b2 = (Poly.gen(reg, b, i) for i in (1, 2))
        fp = [Element.generator(reg, reg.odd_rank(f, i)) for i in (1, 2)]
        fd = [Element.generator(reg, reg.odd_rank(f, i, dual=True)) for i in (1, 2)]
        gp = [Element.generator(reg, reg.odd_rank(g, i)) for i in (1, 2)]
        lhs = bot_contract(f, fd[0] * fd[1] * (fp[0] - gp[0] * b1) * (fp[1] - gp[1] * b2))
        rhs = grassmann_exp([(gp[0] * b1, fd[0]), (gp[1] * b2, fd[1])])
        assert lhs == rhs

    def test_unmatched_primals_die(self):
        reg, _, f, _ = setup_fg()
        assert bot_contract(f, Element.generator(reg, f.primal_ranks()[0])).is_zero

    def test_agrees_with_top_on_matched_elements(self):
        rng = random.Random(20008)
        reg, x, f, g = setup_fg(arity_f=3)
        gens = list(x.gens())
        granks = [r for r in range(reg.num_ranks) if g.owns_rank(r)]
        for _ in range(60):
            e = Element.zero(reg)
            for _ in range(rng.randrange(4)):
                idxs = rng.sample([1, 2, 3], rng.randrange(4))
                seq = [reg.odd_rank(f, i) for i in idxs]
                seq += [reg.odd_rank(f, i, dual=True) for i in idxs]
                seq += rng.sample(granks, rng.randrange(3))
                e = e + Element.word(reg, seq) * rng.randint(-3, 3)
            assert bot_contract(f, e) == top_contract(f, e)

    def test_pinned_mixed_family_example(self):
        """bot_f[f*1 ^ (f1 - b g1)] = 1 + b g1 f*1: the unmatched dual survives."""
        reg = FamilyRegistry()
        b = reg.commuting("b", 1)
        f = reg.odd("f", 1)
        g = reg.odd("g", 1)
        beta = Poly.gen(reg, b, 1)
        fd = Element.generator(reg, f.dual_ranks()[0])
        fp = Element.generator(reg, f.primal_ranks()[0])
        gp = Element.generator(reg, g.primal_ranks()[0])
        got = bot_contract(f, fd * (fp - gp * beta))
        assert got == Element.unit(reg) + gp * fd * beta

    def test_triple_application_collapses(self):
        """Output has no family primals, and the dual parity squares away."""
        rng = random.Random(20009)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        primals = set(f.primal_ranks())
        for _ in range(40):
            e = rand_element(rng, reg, ranks, gens)
            once = bot_contract(f, e)
            for w in once.terms:
                assert not primals & set(w)
            assert bot_contract(f, bot_contract(f, once)) == once

    def test_nested_families(self):
        rng = random.Random(20010)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        for _ in range(40):
            e = rand_element(rng, reg, ranks, gens)
            assert bot_contract(f, bot_contract(g, e)) == bot_contract(g, bot_contract(f, e))


class TestExpAndRowDet:
    def test_exp_matches_subset_expansion(self):
        rng = random.Random(20011)
        reg, x, f, g = setup_fg(arity_f=3, arity_g=3)
        gens = list(x.gens())
        for _ in range(40):
            m = rng.randint(1, 3)
            pairs = []
            for i in range(1, m + 1):
                a = Element.generator(reg, reg.odd_rank(f, i)) * rng.randint(-2, 2)
                b = Element.generator(reg, reg.odd_rank(g, i, dual=True)) * Poly.variable(
                    reg, rng.choice(gens)
                )
                pairs.append((a, b))
            expected = Element.zero(reg)
            for k in range(m + 1):
                for subset in itertools.combinations(range(m), k):
                    term = Element.unit(reg)
                    for i in subset:
                        term = term * (pairs[i][0] * pairs[i][1])
                    expected = expected + term
            assert grassmann_exp(pairs) == expected

    def test_exp_factor_order_irrelevant(self):
        reg, _, f, g = setup_fg()
        pairs = [
            (Element.generator(reg, reg.odd_rank(f, i)), Element.generator(reg, reg.odd_rank(g, i, dual=True)))
            for i in (1, 2)
        ]
        assert grassmann_exp(pairs) == grassmann_exp(list(reversed(pairs)))

    def test_exp_rejects_higher_degree(self):
        reg, _, f, g = setup_fg()
        a = Element.generator(reg, f.primal_ranks()[0])
        b = Element.generator(reg, f.primal_ranks()[1])
        with pytest.raises(ValueError):
            grassmann_exp([(a * b, a)])

    def test_exp_allows_zero_factor(self):
        reg, _, f, g = setup_fg()
        a = Element.generator(reg, f.primal_ranks()[0])
        assert grassmann_exp([(Element.zero(reg), a)]) == Element.unit(reg)

    def test_odd_row_det_is_ordered_product(self):
        reg, x, f, _ = setup_fg()
        p = Poly.gen(reg, x, 1)
        e1 = Element.generator(reg, f.primal_ranks()[0]) + Element.from_poly(p)
        e2 = Element.generator(reg, f.primal_ranks()[1])
        assert odd_row_det([e1, e2]) == e1 * e2
        assert odd_row_det([e2, e1]) == e2 * e1

    def test_odd_row_det_rejects_high_degree(self):
        reg, _, f, _ = setup_fg()
        a = Element.generator(reg, f.primal_ranks()[0])
        b = Element.generator(reg, f.primal_ranks()[1])
        with pytest.raises(ValueError):
            odd_row_det([a * b])


class TestSubstitutionKernels:
    def test_homomorphism_random(self):
        rng = random.Random(20012)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        fp = f.primal_ranks()
        images = {
            fp[0]: Element.generator(reg, g.primal_ranks()[0]) * Poly.gen(reg, x, 1),
            fp[1]: Element.generator(reg, fp[0]) - Element.generator(reg, g.primal_ranks()[1]),
        }
        comm = {reg.comm_gen(x, 1): Poly.gen(reg, x, 2) ** 2}
        kernel = SubstitutionKernel(reg, comm, images)
        for _ in range(60):
            a = rand_element(rng, reg, ranks, gens)
            b = rand_element(rng, reg, ranks, gens)
            assert apply_kernel(kernel, a + b) == apply_kernel(kernel, a) + apply_kernel(kernel, b)
            assert apply_kernel(kernel, a * b) == apply_kernel(kernel, a) * apply_kernel(kernel, b)

    def test_zero_kernel_kills_family(self):
        reg, x, f, g = setup_fg()
        kernel = SubstitutionKernel(reg, {}, {r: Element.zero(reg) for r in f.primal_ranks()})
        e = Element.generator(reg, f.primal_ranks()[0]) * Poly.gen(reg, x, 1) + Element.unit(reg)
        assert apply_kernel(kernel, e) == Element.unit(reg)

    def test_composition(self):
        rng = random.Random(20013)
        reg, x, f, g = setup_fg()
        ranks = list(range(reg.num_ranks))
        gens = list(x.gens())
        k1 = SubstitutionKernel(
            reg,
            {reg.comm_gen(x, 1): Poly.gen(reg, x, 1) + Poly.gen(reg, x, 2)},
            {f.primal_ranks()[0]: Element.generator(reg, g.primal_ranks()[0])},
        )
        k2 = SubstitutionKernel(
            reg,
            {reg.comm_gen(x, 2): Poly.const(reg, 3)},
            {g.primal_ranks()[0]: Element.generator(reg, f.primal_ranks()[1]) * 2},
        )
        composed = compose_kernels(k1, k2)
        for _ in range(40):
            e = rand_element(rng, reg, ranks, gens)
            assert apply_kernel(composed, e) == apply_kernel(k2, apply_kernel(k1, e))

    def test_dual_keys_rejected(self):
        reg, _, f, _ = setup_fg()
        with pytest.raises(ValueError):
            SubstitutionKernel(reg, {}, {f.dual_ranks()[0]: Element.zero(reg)})

    def test_dual_images_rejected(self):
        reg, _, f, _ = setup_fg()
        with pytest.raises(ValueError):
            SubstitutionKernel(
                reg, {}, {f.primal_ranks()[0]: Element.generator(reg, f.dual_ranks()[0])}
            )


class TestBorderedDet:
    def test_one_by_one_pinned(self):
        """bordered_det((G), (-F1)) = G + F1 f*1, coefficient exactly +1."""
        reg = FamilyRegistry()
        x = reg.commuting("x", 1)
        f = reg.odd("f", 1)
        F = reg.odd("F", 1)
        G = Poly.gen(reg, x, 1) ** 2 + 1
        got = bordered_det([[G]], [-Element.generator(reg, F.primal_ranks()[0])], f)
        expected = Element.from_poly(G) + Element.generator(
            reg, F.primal_ranks()[0]
        ) * Element.generator(reg, f.dual_ranks()[0])
        assert got == expected

    def test_identity_matrix_zero_oddrow_is_one(self):
        for s in (1, 2, 3):
            reg = FamilyRegistry()
            f = reg.odd("f", s)
            a = [[Poly.const(reg, 1 if i == j else 0) for j in range(s)] for i in range(s)]
            zero_row = [Element.zero(reg)] * s
            assert bordered_det(a, zero_row, f) == Element.unit(reg)

    def test_square_zero_oddrow_is_determinant(self):
        rng = random.Random(20014)
        for _ in range(40):
            s = rng.randint(1, 3)
            reg = FamilyRegistry()
            f = reg.odd("f", s)
            a = [[Fraction(rng.randint(-3, 3)) for _ in range(s)] for _ in range(s)]
            zero_row = [Element.zero(reg)] * s
            got = bordered_det([[Poly.const(reg, v) for v in row] for row in a], zero_row, f)
            assert got == Element.unit(reg) * det_oracle(a)

    def test_column_antisymmetry(self):
        rng = random.Random(20015)
        for _ in range(30):
            s, n = rng.randint(1, 2), rng.randint(2, 3)
            reg = FamilyRegistry()
            f = reg.odd("f", s)
            F = reg.odd("F", n)
            a = [[Poly.const(reg, rng.randint(-2, 2)) for _ in range(n)] for _ in range(s)]
            row = [Element.generator(reg, reg.odd_rank(F, j + 1)) * rng.randint(-2, 2) for j in range(n)]
            k = rng.randrange(n - 1)
            a2 = [list(r) for r in a]
            row2 = list(row)
            for r in a2:
                r[k], r[k + 1] = r[k + 1], r[k]
            row2[k], row2[k + 1] = row2[k + 1], row2[k]
            assert bordered_det(a2, row2, f) == -bordered_det(a, row, f)

    def test_shape_validation(self):
        reg = FamilyRegistry()
        f = reg.odd("f", 2)
        with pytest.raises(ValueError):
            bordered_det([[Poly.const(reg, 1)]], [Element.zero(reg)], f)


class TestTransgressionDet:
    def test_pinned_univariate_square(self):
        """For f = x^2 the transgression collapses to the divided difference x + y."""
        reg = FamilyRegistry()
        x = reg.commuting("x", 1)
        y = reg.commuting("y", 1)
        fx = reg.odd("fx", 1)
        fy = reg.odd("fy", 1)
        u = reg.odd("u", 1)
        F = Poly.gen(reg, x, 1) ** 2
        grad = [divided_diff(F, x, y)]
        oddrow = [
            Element.generator(reg, fx.primal_ranks()[0])
            - Element.generator(reg, fy.primal_ranks()[0])
        ]
        got = transgression_det([(grad, oddrow)], u)
        assert got == Element.from_poly(Poly.gen(reg, x, 1) + Poly.gen(reg, y, 1))

    def test_pinned_unit_jacobian(self):
        """For f = (x1, x2) the value is exactly +1."""
        reg = FamilyRegistry()
        x = reg.commuting("x", 2)
        y = reg.commuting("y", 2)
        fx = reg.odd("fx", 2)
        fy = reg.odd("fy", 2)
        u = reg.odd("u", 2)
        grad = [[Poly.const(reg, 1 if i == j else 0) for j in range(2)] for i in range(2)]
        oddrow = [
            Element.generator(reg, reg.odd_rank(fx, j)) - Element.generator(reg, reg.odd_rank(fy, j))
            for j in (1, 2)
        ]
        assert transgression_det([(grad, oddrow)], u) == Element.unit(reg)

    def test_pinned_overdetermined_pair(self):
        """f = (x, x^2) over one variable: (f2x - f2y) - (x + y)(f1x - f1y)."""
        reg = FamilyRegistry()
        x = reg.commuting("x", 1)
        y = reg.commuting("y", 1)
        fx = reg.odd("fx", 2)
        fy = reg.odd("fy", 2)
        u = reg.odd("u", 1)
        xp, yp = Poly.gen(reg, x, 1), Poly.gen(reg, y, 1)
        grad = [[Poly.const(reg, 1), xp + yp]]
        diffs = [
            Element.generator(reg, reg.odd_rank(fx, j)) - Element.generator(reg, reg.odd_rank(fy, j))
            for j in (1, 2)
        ]
        got = transgression_det([(grad, diffs)], u)
        assert got == diffs[1] - diffs[0] * (xp + yp)

    def test_square_block_is_determinant(self):
        rng = random.Random(20016)
        for _ in range(40):
            n = rng.randint(1, 3)
            reg = FamilyRegistry()
            fx = reg.odd("fx", n)
            u = reg.odd("u", n)
            a = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            grad = [[Poly.const(reg, v) for v in row] for row in a]
            oddrow = [Element.generator(reg, reg.odd_rank(fx, j + 1)) for j in range(n)]
            got = transgression_det([(grad, oddrow)], u)
            assert got.scalar_part() == Poly.const(reg, det_oracle(a))

    def test_two_blocks_concatenate_columns(self):
        """Splitting the same columns into two blocks changes nothing."""
        reg = FamilyRegistry()
        x = reg.commuting("x", 1)
        fx = reg.odd("fx", 3)
        u = reg.odd("u", 1)
        p = Poly.gen(reg, x, 1)
        grads = [[Poly.const(reg, 1), p, p**2]]
        rows = [Element.generator(reg, reg.odd_rank(fx, j)) for j in (1, 2, 3)]
        whole = transgression_det([(grads, rows)], u)
        split = transgression_det(
            [([grads[0][:2]], rows[:2]), ([grads[0][2:]], rows[2:])], u
        )
        assert whole == split

    def test_shape_validation(self):
        reg = FamilyRegistry()
        fx = reg.odd("fx", 1)
        u = reg.odd("u", 2)
        with pytest.raises(ValueError):
            transgression_det(
                [([[Poly.const(reg, 1)]], [Element.generator(reg, reg.odd_rank(fx, 1))])], u
            )


class TestRendering:
    def test_small_examples(self):
        reg = FamilyRegistry()
        x = reg.commuting("x", 1)
        f = reg.odd("f", 2)
        p = Poly.gen(reg, x, 1)
        e = Element.generator(reg, f.primal_ranks()[0]) * (p + 1) - Element.unit(reg) * 2
        s = render_element(e)
        assert "f1" in s and "x" in s
        assert render_element(Element.zero(reg)) == "0"
        assert render_element(Element.unit(reg)) == "1"
