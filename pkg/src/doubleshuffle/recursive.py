"""Recursive word products: the interleaving product and its merging variant.

These recursions are the reference implementations ("oracle path") that the
closed-form expansion in :mod:`doubleshuffle.explicit` is checked against.
Both recursions are memoized on the word pair; repeated subproblems dominate
the cost from weight ~12 on, and the cache is idempotent so sharing it
between threads is safe.
"""

from __future__ import annotations

from functools import cache

from .core import DomainError, GroupElement, IndexedWord, LinComb, ShuffleWord


@cache
def shuffle(u: ShuffleWord, v: ShuffleWord) -> LinComb:
    """All interleavings of ``u`` and ``v``, each keeping its letter order.

    Satisfies the recursion  a.u' sh b.v' = a.(u' sh b.v') + b.(a.u' sh v')
    with the empty word as unit; the coefficients of the result always sum
    to C(len(u)+len(v), len(u)).
    """
    if not u.letters:
        return LinComb.single(v)
    if not v.letters:
        return LinComb.single(u)
    a, b = u.letters[0], v.letters[0]
    u_tail = ShuffleWord(u.letters[1:])
    v_tail = ShuffleWord(v.letters[1:])
    data: dict[ShuffleWord, int] = {}
    for w, c in shuffle(u_tail, v).iterterms():
        key = ShuffleWord((a,) + w.letters)
        data[key] = data.get(key, 0) + c
    for w, c in shuffle(u, v_tail).iterterms():
        key = ShuffleWord((b,) + w.letters)
        data[key] = data.get(key, 0) + c
    return LinComb(data)


@cache
def quasi_shuffle(mu: IndexedWord, nu: IndexedWord) -> LinComb:
    """Interleavings where the two leading pairs may also merge into one.

    Merging adds exponents and multiplies marks, so over the trivial group
    this is the classical sum-representation product rule.
    """
    if not mu.pairs:
        return LinComb.single(nu)
    if not nu.pairs:
        return LinComb.single(mu)
    (s1, b1) = mu.pairs[0]
    (s2, b2) = nu.pairs[0]
    mu_tail = IndexedWord(mu.pairs[1:])
    nu_tail = IndexedWord(nu.pairs[1:])
    data: dict[IndexedWord, int] = {}
    for head, left, right in (
        ((s1, b1), mu_tail, nu),
        ((s2, b2), mu, nu_tail),
        ((s1 + s2, b1 * b2), mu_tail, nu_tail),
    ):
        for w, c in quasi_shuffle(left, right).iterterms():
            key = IndexedWord((head,) + w.pairs)
            data[key] = data.get(key, 0) + c
    return LinComb(data)


def op_P(x: LinComb) -> LinComb:
    """Raise the leading exponent of every word by one.

    Defined only on combinations of nonempty words (the unit has no leading
    exponent to raise).
    """
    def bump(word: IndexedWord) -> IndexedWord:
        if not word.pairs:
            raise DomainError("exponent-raising operator is undefined on the empty word")
        (s1, b1) = word.pairs[0]
        return IndexedWord(((s1 + 1, b1),) + word.pairs[1:])

    return x.map_words(bump)


def op_Q(b: GroupElement, x: LinComb) -> LinComb:
    """Prepend the pair (1, b) to every word; sends the unit to ((1, b))."""
    return x.map_words(lambda word: IndexedWord(((1, b),) + word.pairs))
