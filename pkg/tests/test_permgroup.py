import itertools
import random

import pytest

from dlchow import permgroup as pg
from dlchow.permgroup import Twist
from dlchow.polyring import LaurentPoly


def s(i, n):
    return pg.simple_reflection(i, n)


class TestCompose:
    def test_s1_s2(self):
        assert pg.compose(s(1, 3), s(2, 3)) == (2, 3, 1)

    def test_identity_is_neutral(self):
        for w in pg.all_elements(3):
            assert pg.compose(w, pg.identity(3)) == w
            assert pg.compose(pg.identity(3), w) == w

    def test_involution(self):
        assert pg.compose(s(1, 3), s(1, 3)) == pg.identity(3)

    def test_associative(self):
        elems = list(pg.all_elements(3))
        for u, v, w in itertools.product(elems, repeat=3):
            assert pg.compose(pg.compose(u, v), w) == pg.compose(u, pg.compose(v, w))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            pg.compose(s(1, 3), s(1, 4))


class TestLength:
    def test_longest(self):
        assert pg.length((3, 2, 1)) == 3

    def test_identity(self):
        assert pg.length(pg.identity(4)) == 0

    def test_two_inversions(self):
        # inversions of (2,3,1): the pairs (1,3) and (2,3)
        assert pg.length((2, 3, 1)) == 2

    def test_matches_word_length(self):
        for w in pg.all_elements(4):
            assert pg.length(w) == len(pg.reduced_word(w))

    def test_inverse_and_w0_relations(self):
        for n in (2, 3, 4):
            w0 = pg.longest_element(n)
            for w in pg.all_elements(n):
                assert pg.length(w) == pg.length(pg.inverse(w))
                assert pg.length(pg.compose(w0, w)) == pg.length(w0) - pg.length(w)

    def test_generator_steps_change_length_by_one(self):
        for w in pg.all_elements(4):
            for i in (1, 2, 3):
                step = pg.length(pg.mul_simple_right(w, i)) - pg.length(w)
                assert step in (-1, 1)


def all_reduced_words(w):
    """Every reduced word of w, by peeling left descents."""
    if w == pg.identity(len(w)):
        yield ()
        return
    for i in pg.left_descents(w):
        for rest in all_reduced_words(pg.mul_simple_left(w, i)):
            yield (i,) + rest


class TestReducedWord:
    def test_identity(self):
        assert pg.reduced_word(pg.identity(3)) == ()

    def test_two_letter(self):
        assert pg.reduced_word((2, 3, 1)) == (1, 2)

    def test_longest_lex_min(self):
        assert pg.reduced_word((3, 2, 1)) == (1, 2, 1)

    def test_product_and_minimality(self):
        for w in pg.all_elements(4):
            word = pg.reduced_word(w)
            assert pg.word_to_perm(word, 4) == w
            assert len(word) == pg.length(w)
            assert word == min(all_reduced_words(w))


def random_word_moves(word, rng, steps=25):
    """Rewrite a reduced word by random exchange and braid moves."""
    word = list(word)
    for _ in range(steps):
        spots = []
        for k in range(len(word) - 1):
            if abs(word[k] - word[k + 1]) >= 2:
                spots.append(("swap", k))
        for k in range(len(word) - 2):
            if word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1:
                spots.append(("braid", k))
        if not spots:
            break
        kind, k = rng.choice(spots)
        if kind == "swap":
            word[k], word[k + 1] = word[k + 1], word[k]
        else:
            a, b = word[k], word[k + 1]
            word[k], word[k + 1], word[k + 2] = b, a, b
    return tuple(word)


class TestSupport:
    def test_disjoint_generators(self):
        assert pg.support(pg.compose(s(1, 4), s(3, 4))) == frozenset({1, 3})

    def test_identity(self):
        assert pg.support(pg.identity(4)) == frozenset()

    def test_longest_s3(self):
        assert pg.support((3, 2, 1)) == frozenset({1, 2})

    def test_word_independence(self):
        rng = random.Random(7)
        for n in (3, 4):
            for w in pg.all_elements(n):
                base = pg.reduced_word(w)
                for _ in range(4):
                    moved = random_word_moves(base, rng)
                    assert pg.word_to_perm(moved, n) == w
                    assert frozenset(moved) == pg.support(w)


def bruhat_leq_subword(u, v):
    """Oracle: u <= v iff some subword of a reduced word of v equals u."""
    word = pg.reduced_word(v)
    n = len(v)
    for mask in range(1 << len(word)):
        sub = [word[k] for k in range(len(word)) if mask >> k & 1]
        if pg.word_to_perm(sub, n) == u:
            return True
    return False


class TestBruhat:
    def test_examples(self):
        s1, s2 = s(1, 3), s(2, 3)
        assert pg.bruhat_leq(s1, pg.compose(s1, s2))
        assert not pg.bruhat_leq(s1, s2)
        for w in pg.all_elements(3):
            assert pg.bruhat_leq(pg.identity(3), w)

    def test_against_subword_oracle(self):
        for n in (2, 3, 4):
            elems = list(pg.all_elements(n))
            for u in elems:
                for v in elems:
                    assert pg.bruhat_leq(u, v) == bruhat_leq_subword(u, v)

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            pg.bruhat_leq(s(1, 3), s(1, 4))


class TestTwist:
    def test_trivial(self):
        for w in pg.all_elements(3):
            assert pg.apply_twist(Twist.TRIVIAL, w) == w

    def test_conj_sends_s1_to_s2(self):
        assert pg.apply_twist(Twist.CONJ_BY_W0, s(1, 3)) == s(2, 3)

    def test_w0_fixed(self):
        w0 = pg.longest_element(4)
        assert pg.apply_twist(Twist.CONJ_BY_W0, w0) == w0

    def test_generator_flip(self):
        for n in (3, 4, 5):
            for i in range(1, n):
                assert pg.apply_twist(Twist.CONJ_BY_W0, s(i, n)) == s(n - i, n)

    def test_automorphism_preserving_length(self):
        elems = list(pg.all_elements(4))
        for twist in Twist:
            for u in elems:
                assert pg.length(pg.apply_twist(twist, u)) == pg.length(u)
            for u, v in itertools.product(elems[:8], elems[:8]):
                assert pg.apply_twist(twist, pg.compose(u, v)) == pg.compose(
                    pg.apply_twist(twist, u), pg.apply_twist(twist, v)
                )


class TestTwistedSupportClosure:
    def test_trivial_is_support(self):
        for w in pg.all_elements(4):
            assert pg.twisted_support_closure(Twist.TRIVIAL, w) == pg.support(w)

    def test_orbit_of_s1(self):
        assert pg.twisted_support_closure(Twist.CONJ_BY_W0, s(1, 4)) == frozenset({1, 3})

    def test_fixed_generator(self):
        assert pg.twisted_support_closure(Twist.CONJ_BY_W0, s(2, 4)) == frozenset({2})

    def test_twist_stable(self):
        for w in pg.all_elements(4):
            closure = pg.twisted_support_closure(Twist.CONJ_BY_W0, w)
            image = pg.twisted_support_closure(
                Twist.CONJ_BY_W0, pg.apply_twist(Twist.CONJ_BY_W0, w)
            )
            assert closure == image


def parabolic_poincare(indices, n):
    out = LaurentPoly.zero()
    for w in pg.all_elements(n):
        if pg.support(w) <= frozenset(indices):
            out = out + LaurentPoly({pg.length(w): 1})
    return out


class TestCosetData:
    def test_full_parabolic(self):
        data = pg.coset_data(set(range(1, 4)), 4)
        assert data.representatives == (pg.identity(4),)
        assert data.poincare == LaurentPoly.one()

    def test_empty_parabolic(self):
        data = pg.coset_data(set(), 3)
        assert len(data.representatives) == 6
        assert data.poincare == parabolic_poincare({1, 2}, 3)

    def test_rank3_single_generator(self):
        data = pg.coset_data({1}, 3)
        assert len(data.representatives) == 3
        assert data.poincare == LaurentPoly({0: 1, 1: 1, 2: 1})

    def test_poincare_at_one_counts_cosets(self):
        from dlchow.polyring import eval_univariate

        for indices in (set(), {1}, {2, 3}, {1, 3}):
            data = pg.coset_data(indices, 4)
            assert eval_univariate(data.poincare, 1) == len(data.representatives)

    def test_cardinality_and_cosets(self):
        # representatives hit every coset of W_I exactly once
        for indices in ({1}, {2}, {1, 3}, {1, 2}):
            data = pg.coset_data(indices, 4)
            members = [
                w for w in pg.all_elements(4) if pg.support(w) <= frozenset(indices)
            ]
            assert len(data.representatives) * len(members) == 24
            seen = set()
            for rep in data.representatives:
                for m in members:
                    seen.add(pg.compose(rep, m))
            assert len(seen) == 24

    def test_poincare_factorization(self):
        full = parabolic_poincare({1, 2, 3}, 4)
        for r in range(4):
            for indices in itertools.combinations((1, 2, 3), r):
                data = pg.coset_data(set(indices), 4)
                assert data.poincare * parabolic_poincare(indices, 4) == full

    def test_bad_index(self):
        with pytest.raises(ValueError):
            pg.coset_data({3}, 3)


class TestAllElements:
    def test_rank_one(self):
        assert list(pg.all_elements(1)) == [(1,)]

    def test_rank_three_lengths(self):
        assert [pg.length(w) for w in pg.all_elements(3)] == [0, 1, 1, 2, 2, 3]

    def test_rank_four_count(self):
        elems = list(pg.all_elements(4))
        assert len(elems) == 24
        assert len(set(elems)) == 24


class TestTextForms:
    def test_one_line(self):
        assert pg.parse_perm("2,3,1") == (2, 3, 1)

    def test_word(self):
        assert pg.parse_perm("s1 s2", 3) == (2, 3, 1)

    def test_id(self):
        assert pg.parse_perm("id", 3) == (1, 2, 3)

    def test_render(self):
        assert pg.render_perm((2, 3, 1)) == "s1 s2"
        assert pg.render_perm((1, 2, 3)) == "id"

    def test_round_trip(self):
        for w in pg.all_elements(4):
            assert pg.parse_perm(pg.render_perm(w), 4) == w

    def test_errors(self):
        with pytest.raises(ValueError):
            pg.parse_perm("1,1,2")
        with pytest.raises(ValueError):
            pg.parse_perm("2,3,1", 4)
        with pytest.raises(ValueError):
            pg.parse_perm("s1 s2")
        with pytest.raises(ValueError):
            pg.parse_perm("s9", 3)
