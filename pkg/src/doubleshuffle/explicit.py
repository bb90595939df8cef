"""Closed-form expansion of the transported interleaving products.

The products ``product_b``/``product_e`` of :mod:`doubleshuffle.maps` are
defined by a recursion; here the same products are computed directly as a
double sum over index pairs (order-preserving splittings of the target
positions) and compositions of the total weight, with an explicit binomial
coefficient per position.  Agreement of the two routes is the central
correctness property of the library and is enforced by the test suite.

The module also houses the coefficient calculus itself: the nonvanishing
predicate, the shift/prepend identities used by the inductive argument, the
bijections between restricted index pairs, and an equivalent formulation in
terms of shuffle permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import DomainError, GroupElement, IndexedWord, LinComb, binomial


@dataclass(frozen=True)
class IndexPair:
    """A splitting of positions 1..k+l into a k-set (phi) and its complement (psi).

    ``phi_mask`` has bit ``i-1`` set iff position ``i`` lies in the image of
    phi; phi and psi themselves are the order-preserving enumerations of the
    two sets, so the mask determines the pair completely.
    """

    k: int
    l: int
    phi_mask: int

    def __post_init__(self) -> None:
        n = self.k + self.l
        if self.k < 0 or self.l < 0:
            raise ValueError("k and l must be >= 0")
        if self.phi_mask < 0 or self.phi_mask >> n:
            raise ValueError("mask has bits outside 1..k+l")
        if self.phi_mask.bit_count() != self.k:
            raise ValueError("mask size does not match k")

    @classmethod
    def from_phi_image(cls, k: int, l: int, positions: Iterator[int]) -> "IndexPair":
        mask = 0
        for i in positions:
            mask |= 1 << (i - 1)
        return cls(k, l, mask)

    @property
    def phi_image(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.k + self.l + 1)
                     if self.phi_mask >> (i - 1) & 1)

    @property
    def psi_image(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.k + self.l + 1)
                     if not self.phi_mask >> (i - 1) & 1)

    def in_phi(self, i: int) -> bool:
        return bool(self.phi_mask >> (i - 1) & 1)

    def phi(self, j: int) -> int:
        return self.phi_image[j - 1]

    def psi(self, j: int) -> int:
        return self.psi_image[j - 1]

    def phi_index(self, i: int) -> int:
        """j with phi(j) = i, assuming i lies in the phi image (1-based)."""
        return (self.phi_mask & ((1 << i) - 1)).bit_count()

    def psi_index(self, i: int) -> int:
        return i - (self.phi_mask & ((1 << i) - 1)).bit_count()


def enum_index_pairs(k: int, l: int) -> Iterator[IndexPair]:
    """All C(k+l, k) index pairs, lexicographic in the phi image.

    For k = 0 (resp. l = 0) this is the single degenerate pair whose phi
    (resp. psi) is the empty map.
    """
    if k < 0 or l < 0:
        raise ValueError("k and l must be >= 0")
    for positions in combinations(range(1, k + l + 1), k):
        yield IndexPair.from_phi_image(k, l, positions)


def enum_compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All C(n-1, m-1) vectors of m positive integers summing to n, lexicographic."""
    if m < 1 or n < m:
        return
    if m == 1:
        yield (n,)
        return
    for first in range(1, n - m + 2):
        for rest in enum_compositions(n - first, m - 1):
            yield (first,) + rest


def h_value(pair: IndexPair, r: tuple[int, ...], s: tuple[int, ...], i: int) -> int:
    """The exponent routed to position i: r_j if i = phi(j), s_j if i = psi(j)."""
    if not 1 <= i <= pair.k + pair.l:
        raise DomainError(f"position {i} out of range 1..{pair.k + pair.l}")
    if pair.in_phi(i):
        return r[pair.phi_index(i) - 1]
    return s[pair.psi_index(i) - 1]


def epsilon(pair: IndexPair, i: int) -> int:
    """+1 on the phi image, -1 on the psi image."""
    if not 1 <= i <= pair.k + pair.l:
        raise DomainError(f"position {i} out of range 1..{pair.k + pair.l}")
    return 1 if pair.in_phi(i) else -1


def coeff_factor(pair: IndexPair, r: tuple[int, ...], s: tuple[int, ...],
                 t: tuple[int, ...], i: int) -> int:
    """The i-th binomial factor of the expansion coefficient.

    Within a run of positions drawn from the same source the factor is
    C(t_i - 1, h_i - 1); at a source switch it is C(t_i - 1, T_i - H_i)
    with T, H the prefix sums of t and h.
    """
    if i == 1 or epsilon(pair, i) == epsilon(pair, i - 1):
        return binomial(t[i - 1] - 1, h_value(pair, r, s, i) - 1)
    ti = sum(t[:i])
    hi = sum(h_value(pair, r, s, j) for j in range(1, i + 1))
    return binomial(t[i - 1] - 1, ti - hi)


def coeff(pair: IndexPair, r: tuple[int, ...], s: tuple[int, ...],
          t: tuple[int, ...]) -> int:
    """Product of all position factors; the expansion coefficient of t."""
    h, eps = _routing(pair, r, s)
    return _coeff_fast(eps, h, _prefix(h), t)


def coeff_nonzero(pair: IndexPair, r: tuple[int, ...], s: tuple[int, ...],
                  t: tuple[int, ...]) -> bool:
    """O(k+l) nonvanishing test, equivalent to ``coeff(...) != 0``.

    Same-source positions need t_i >= h_i; at a source switch the prefix
    sums must satisfy T_i >= H_i > T_{i-1}.
    """
    h, eps = _routing(pair, r, s)
    tsum = hsum = 0
    prev_tsum = 0
    for i, ti in enumerate(t):
        prev_tsum = tsum
        tsum += ti
        hsum += h[i]
        if i == 0 or eps[i] == eps[i - 1]:
            if ti < h[i]:
                return False
        else:
            if not (tsum >= hsum > prev_tsum):
                return False
    return True


def merge_marks_b(pair: IndexPair, a: tuple[GroupElement, ...],
                  b: tuple[GroupElement, ...]) -> tuple[GroupElement, ...]:
    """Route the two mark vectors into target positions: a_j at phi(j), b_j at psi(j)."""
    if len(a) != pair.k or len(b) != pair.l:
        raise DomainError("mark vectors do not match the arity of the pair")
    out = []
    ja = jb = 0
    for i in range(1, pair.k + pair.l + 1):
        if pair.in_phi(i):
            out.append(a[ja])
            ja += 1
        else:
            out.append(b[jb])
            jb += 1
    return tuple(out)


def merge_marks_e(pair: IndexPair, w: tuple[GroupElement, ...],
                  z: tuple[GroupElement, ...]) -> tuple[GroupElement, ...]:
    """Quotient-coordinate merge: same-source runs copy the mark, source
    switches take the quotient of the two prefix products accumulated so far.
    """
    if len(w) != pair.k or len(z) != pair.l:
        raise DomainError("mark vectors do not match the arity of the pair")
    # 1-based prefix products; index 0 is the identity.
    wp = [GroupElement(0, 1)]
    for x in w:
        wp.append(wp[-1] * x)
    zp = [GroupElement(0, 1)]
    for x in z:
        zp.append(zp[-1] * x)
    out = []
    for i in range(1, pair.k + pair.l + 1):
        if pair.in_phi(i):
            j = pair.phi_index(i)
            if i == 1 or pair.in_phi(i - 1):
                out.append(w[j - 1])
            else:
                out.append(wp[j] / zp[i - j])
        else:
            j = pair.psi_index(i)
            if i == 1 or not pair.in_phi(i - 1):
                out.append(z[j - 1])
            else:
                out.append(zp[j] / wp[i - j])
    return tuple(out)


def _routing(pair: IndexPair, r: tuple[int, ...],
             s: tuple[int, ...]) -> tuple[list[int], list[bool]]:
    """Per-position exponent h and source flag (True on the phi image)."""
    h: list[int] = []
    eps: list[bool] = []
    jr = js = 0
    mask = pair.phi_mask
    for i in range(pair.k + pair.l):
        if mask >> i & 1:
            h.append(r[jr])
            jr += 1
            eps.append(True)
        else:
            h.append(s[js])
            js += 1
            eps.append(False)
    return h, eps


def _prefix(h: list[int]) -> list[int]:
    out = [0]
    for x in h:
        out.append(out[-1] + x)
    return out


def _coeff_fast(eps: list[bool], h: list[int], hpre: list[int],
                t: tuple[int, ...]) -> int:
    c = 1
    tsum = 0
    for i, ti in enumerate(t):
        tsum += ti
        if i == 0 or eps[i] == eps[i - 1]:
            f = binomial(ti - 1, h[i] - 1)
        else:
            f = binomial(ti - 1, tsum - hpre[i + 1])
        if not f:
            return 0
        c *= f
    return c


def _explicit_product(mu: IndexedWord, nu: IndexedWord, merge) -> LinComb:
    r, a = mu.exponents, mu.marks
    s, b = nu.exponents, nu.marks
    k, l = len(r), len(s)
    if k == 0 and l == 0:
        return LinComb.single(IndexedWord())
    n = k + l
    total = sum(r) + sum(s)
    data: dict[IndexedWord, int] = {}
    for pair in enum_index_pairs(k, l):
        h, eps = _routing(pair, r, s)
        hpre = _prefix(h)
        marks = merge(pair, a, b)
        for t in enum_compositions(total, n):
            c = _coeff_fast(eps, h, hpre, t)
            if c:
                word = IndexedWord(tuple(zip(t, marks)))
                data[word] = data.get(word, 0) + c
    return LinComb(data)


def explicit_product_b(mu: IndexedWord, nu: IndexedWord) -> LinComb:
    """Closed form of ``maps.product_b``: sum coeff * (t; merged marks) over
    all index pairs and all compositions t of the combined weight.

    An empty factor is absorbed by the degenerate pair convention, under
    which the coefficient collapses to a Kronecker delta.
    """
    return _explicit_product(mu, nu, merge_marks_b)


def explicit_product_e(mu: IndexedWord, nu: IndexedWord) -> LinComb:
    """Closed form of ``maps.product_e``: same coefficients as the b-form,
    with the quotient-coordinate mark merge."""
    return _explicit_product(mu, nu, merge_marks_e)


# ---------------------------------------------------------------------------
# Shuffle-permutation formulation


def sigma_of_pair(pair: IndexPair) -> tuple[int, ...]:
    """The permutation with sigma(i) = phi^{-1}(i) on the phi image and
    k + psi^{-1}(i) on the psi image; inverse of :func:`pair_of_sigma`."""
    out = []
    for i in range(1, pair.k + pair.l + 1):
        if pair.in_phi(i):
            out.append(pair.phi_index(i))
        else:
            out.append(pair.k + pair.psi_index(i))
    return tuple(out)


def pair_of_sigma(sigma: tuple[int, ...], k: int) -> IndexPair:
    """Recover the index pair from a (k, l)-shuffle permutation."""
    n = len(sigma)
    l = n - k
    if not is_shuffle_perm(sigma, k):
        raise DomainError("sigma is not a (k, l)-shuffle permutation")
    low = [i for i in range(1, n + 1) if sigma[i - 1] <= k]
    return IndexPair.from_phi_image(k, l, low)


def is_shuffle_perm(sigma: tuple[int, ...], k: int) -> bool:
    """True when sigma is order preserving on values 1..k and on k+1..k+l."""
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        return False
    low = [v for v in sigma if v <= k]
    high = [v for v in sigma if v > k]
    return low == sorted(low) and high == sorted(high)


def enum_shuffle_perms(k: int, l: int) -> Iterator[tuple[int, ...]]:
    """All C(k+l, k) shuffle permutations, in index-pair order."""
    for pair in enum_index_pairs(k, l):
        yield sigma_of_pair(pair)


def perm_coeff(sigma: tuple[int, ...], r: tuple[int, ...], s: tuple[int, ...],
               t: tuple[int, ...]) -> int:
    """Expansion coefficient in permutation form.

    kappa is the concatenation (r, s); the i-th factor is
    C(t_i - 1, kappa_{sigma(i)} - 1 - [source switch] * sum_{j<i}(t_j - kappa_{sigma(j)}))
    with the convention that position 0 counts as the same source as position 1.
    """
    k = len(r)
    if not is_shuffle_perm(sigma, k):
        raise DomainError("sigma is not a (k, l)-shuffle permutation")
    kappa = r + s
    c = 1
    drift = 0  # sum_{j<i} (t_j - kappa_{sigma(j)})
    prev_low = sigma[0] <= k if sigma else True
    for i, ti in enumerate(t):
        low = sigma[i] <= k
        arg = kappa[sigma[i] - 1] - 1
        if low != prev_low:
            arg -= drift
        f = binomial(ti - 1, arg)
        if not f:
            return 0
        c *= f
        drift += ti - kappa[sigma[i] - 1]
        prev_low = low
    return c


def perm_product_b(mu: IndexedWord, nu: IndexedWord) -> LinComb:
    """The b-form product computed through the permutation formulation."""
    r, a = mu.exponents, mu.marks
    s, b = nu.exponents, nu.marks
    k, l = len(r), len(s)
    if k == 0 and l == 0:
        return LinComb.single(IndexedWord())
    total = sum(r) + sum(s)
    data: dict[IndexedWord, int] = {}
    for sigma in enum_shuffle_perms(k, l):
        pair = pair_of_sigma(sigma, k)
        marks = merge_marks_b(pair, a, b)
        for t in enum_compositions(total, k + l):
            c = perm_coeff(sigma, r, s, t)
            if c:
                word = IndexedWord(tuple(zip(t, marks)))
                data[word] = data.get(word, 0) + c
    return LinComb(data)


# ---------------------------------------------------------------------------
# Shift maps on order-preserving injections and the induced bijections


def dagger(f: tuple[int, ...]) -> tuple[int, ...]:
    """Drop the first value and shift the rest down: x -> f(x+1) - 1."""
    return tuple(v - 1 for v in f[1:])


def sharp(f: tuple[int, ...]) -> tuple[int, ...]:
    """Shift all values down: x -> f(x) - 1."""
    return tuple(v - 1 for v in f)


def amp(f: tuple[int, ...]) -> tuple[int, ...]:
    """Prepend 1 and shift the rest up: 1, f(1)+1, ..., f(k)+1."""
    return (1,) + tuple(v + 1 for v in f)


def star(f: tuple[int, ...]) -> tuple[int, ...]:
    """Shift all values up: y -> f(y) + 1."""
    return tuple(v + 1 for v in f)


def restrict_phi_leading(pair: IndexPair) -> IndexPair:
    """(phi, psi) with phi(1) = 1  ->  (dagger phi, sharp psi); drops one phi slot."""
    if pair.k == 0 or not pair.in_phi(1):
        raise DomainError("pair does not have phi(1) = 1")
    return IndexPair.from_phi_image(pair.k - 1, pair.l, dagger(pair.phi_image))


def extend_phi_leading(pair: IndexPair) -> IndexPair:
    """Inverse of :func:`restrict_phi_leading`: (phi, psi) -> (amp phi, star psi)."""
    return IndexPair.from_phi_image(pair.k + 1, pair.l, amp(pair.phi_image))


def restrict_psi_leading(pair: IndexPair) -> IndexPair:
    """(phi, psi) with psi(1) = 1  ->  (sharp phi, dagger psi); drops one psi slot."""
    if pair.l == 0 or pair.in_phi(1):
        raise DomainError("pair does not have psi(1) = 1")
    return IndexPair.from_phi_image(pair.k, pair.l - 1, sharp(pair.phi_image))


def extend_psi_leading(pair: IndexPair) -> IndexPair:
    """Inverse of :func:`restrict_psi_leading`: (phi, psi) -> (star phi, amp psi)."""
    return IndexPair.from_phi_image(pair.k, pair.l + 1, star(pair.phi_image))
