"""Recursive products against brute-force enumeration, plus the operator laws."""

import pytest

from doubleshuffle import (MINUS_ONE, ONE, DomainError, IndexedWord, Letter,
                           LinComb, ShuffleWord, bilinear, binomial, op_P,
                           op_Q, quasi_shuffle, shuffle)
from doubleshuffle.maps import product_b

from bruteforce import brute_quasi_shuffle, brute_shuffle
from helpers import all_indexed_words, all_shuffle_words, zw

X0, X1 = Letter(None), Letter(ONE)


def sword(*letters):
    return ShuffleWord(letters)


class TestShuffle:
    def test_unit_law(self):
        w = sword(X0, X1)
        assert shuffle(ShuffleWord(), w) == LinComb.single(w)
        assert shuffle(w, ShuffleWord()) == LinComb.single(w)

    def test_square_of_01(self):
        w = sword(X0, X1)
        expected = LinComb([(sword(X0, X1, X0, X1), 2),
                            (sword(X0, X0, X1, X1), 4)])
        assert shuffle(w, w) == expected
        assert brute_shuffle(w, w) == expected

    def test_01_with_1(self):
        expected = LinComb([(sword(X0, X1, X1), 2), (sword(X1, X0, X1), 1)])
        assert shuffle(sword(X0, X1), sword(X1)) == expected
        assert brute_shuffle(sword(X0, X1), sword(X1)) == expected

    @pytest.mark.parametrize("order", [1, 2])
    def test_matches_bruteforce(self, order):
        words = all_shuffle_words(3, order)
        for u in words:
            for v in words:
                assert shuffle(u, v) == brute_shuffle(u, v), (u, v)

    def test_coefficient_mass(self):
        for order in (1, 2):
            words = all_shuffle_words(3, order)
            for u in words:
                for v in words:
                    assert shuffle(u, v).mass() == binomial(len(u) + len(v), len(u))


class TestQuasiShuffle:
    def test_depth_one_product(self):
        # the classical three-term expansion of a product of two single sums
        assert quasi_shuffle(zw(2), zw(3)) == LinComb(
            [(zw(2, 3), 1), (zw(3, 2), 1), (zw(5), 1)])

    def test_unit_law(self):
        nu = zw(2, 1)
        assert quasi_shuffle(IndexedWord(), nu) == LinComb.single(nu)
        assert quasi_shuffle(nu, IndexedWord()) == LinComb.single(nu)

    def test_sign_marks_multiply(self):
        m = IndexedWord(((1, MINUS_ONE),))
        expected = LinComb([(IndexedWord(((1, MINUS_ONE), (1, MINUS_ONE))), 2),
                            (IndexedWord(((2, ONE),)), 1)])
        assert quasi_shuffle(m, m) == expected

    @pytest.mark.parametrize("order", [1, 2])
    def test_matches_bruteforce(self, order):
        words = all_indexed_words(4, order=order)
        for mu in words:
            for nu in words:
                if mu.weight + nu.weight <= 5:
                    assert quasi_shuffle(mu, nu) == brute_quasi_shuffle(mu, nu)


class TestProductLaws:
    @pytest.mark.parametrize("order", [1, 2])
    def test_shuffle_commutative_and_associative(self, order):
        words = all_shuffle_words(4, order)
        pool = [w for w in words if len(w) <= 3]
        for u in pool:
            for v in pool:
                if len(u) + len(v) <= 6:
                    assert shuffle(u, v) == shuffle(v, u)
        small = [w for w in words if len(w) <= 2]
        for u in small:
            for v in small:
                for w in small:
                    if len(u) + len(v) + len(w) <= 6:
                        left = bilinear(shuffle, shuffle(u, v), LinComb.single(w))
                        right = bilinear(shuffle, LinComb.single(u), shuffle(v, w))
                        assert left == right

    @pytest.mark.parametrize("order", [1, 2])
    def test_quasi_shuffle_commutative_and_associative(self, order):
        words = all_indexed_words(4, order=order)
        for mu in words:
            for nu in words:
                if mu.weight + nu.weight <= 6:
                    assert quasi_shuffle(mu, nu) == quasi_shuffle(nu, mu)
        small = [w for w in words if w.weight <= 2]
        for u in small:
            for v in small:
                for w in small:
                    if u.weight + v.weight + w.weight <= 6:
                        left = bilinear(quasi_shuffle, quasi_shuffle(u, v),
                                        LinComb.single(w))
                        right = bilinear(quasi_shuffle, LinComb.single(u),
                                         quasi_shuffle(v, w))
                        assert left == right


class TestOperators:
    def test_exponent_raise(self):
        assert op_P(LinComb.single(zw(2, 1))) == LinComb.single(zw(3, 1))

    def test_prepend_on_unit(self):
        b = MINUS_ONE
        assert op_Q(b, LinComb.single(IndexedWord())) == \
            LinComb.single(IndexedWord(((1, b),)))

    def test_prepend_marked(self):
        got = op_Q(MINUS_ONE, LinComb.single(IndexedWord(((2, ONE),))))
        assert got == LinComb.single(IndexedWord(((1, MINUS_ONE), (2, ONE))))

    def test_raise_rejects_unit(self):
        with pytest.raises(DomainError):
            op_P(LinComb.single(IndexedWord()))

    @pytest.mark.parametrize("order", [1, 2])
    def test_rota_baxter_relations(self, order):
        # the four splitting identities characterizing the transported product
        from doubleshuffle import group_elements
        prod = lambda x, y: bilinear(product_b, x, y)
        words = all_indexed_words(2, order=order)
        nonempty = [w for w in words if w.depth > 0]
        singles = {w: LinComb.single(w) for w in words}
        marks = group_elements(order)
        for mu in nonempty:
            for nu in nonempty:
                if mu.weight + nu.weight + 2 > 6:
                    continue
                x, y = singles[mu], singles[nu]
                assert prod(op_P(x), op_P(y)) == \
                    op_P(prod(x, op_P(y))) + op_P(prod(op_P(x), y))
        for mu in words:
            for nu in words:
                if mu.weight + nu.weight + 2 > 6:
                    continue
                x, y = singles[mu], singles[nu]
                for a in marks:
                    for b in marks:
                        lhs = prod(op_Q(a, x), op_Q(b, y))
                        rhs = op_Q(a, prod(x, op_Q(b, y))) + \
                            op_Q(b, prod(op_Q(a, x), y))
                        assert lhs == rhs
        for mu in nonempty:
            for nu in words:
                if mu.weight + nu.weight + 2 > 6:
                    continue
                x, y = singles[mu], singles[nu]
                for b in marks:
                    lhs = prod(op_P(x), op_Q(b, y))
                    rhs = op_Q(b, prod(op_P(x), y)) + op_P(prod(x, op_Q(b, y)))
                    assert lhs == rhs
                    lhs = prod(op_Q(b, y), op_P(x))
                    rhs = op_Q(b, prod(y, op_P(x))) + op_P(prod(op_Q(b, y), x))
                    assert lhs == rhs
