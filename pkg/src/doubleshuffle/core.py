"""Exact arithmetic kernel: roots of unity, words, integer linear combinations.

Everything in this module is an immutable value with structural equality.
Coefficients are plain Python ints, so linear combinations stay exact at any
weight; group marks are stored as reduced fractions of a full turn, so word
equality is exact as well.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), zero whenever b < 0, a < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


class GroupElement:
    """A root of unity exp(2*pi*i * num/den).

    The angle num/den is kept reduced with 0 <= num < den, so equal group
    elements compare and hash equally.  Multiplication adds angles mod 1;
    every element has finite order.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1) -> None:
        if den <= 0:
            raise ValueError("denominator must be positive")
        num %= den
        g = math.gcd(num, den)
        self.num = num // g
        self.den = den // g

    @property
    def angle(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        return self.den

    @property
    def is_identity(self) -> bool:
        return self.num == 0

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    def inverse(self) -> "GroupElement":
        return GroupElement(-self.num, self.den)

    def __truediv__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.num * other.den - other.num * self.den,
                            self.den * other.den)

    def to_complex(self) -> complex:
        """Value on the unit circle; exact for the 1st, 2nd and 4th roots."""
        if self.den == 1:
            return 1 + 0j
        if self.den == 2:
            return -1 + 0j
        if self.den == 4:
            return 1j if self.num == 1 else -1j
        return complex(math.cos(2 * math.pi * self.num / self.den),
                       math.sin(2 * math.pi * self.num / self.den))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupElement)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"GroupElement({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ONE = GroupElement(0, 1)
MINUS_ONE = GroupElement(1, 2)


def group_elements(order: int) -> list[GroupElement]:
    """The cyclic group of the given order, listed by increasing angle."""
    if order < 1:
        raise ValueError("group order must be >= 1")
    return [GroupElement(j, order) for j in range(order)]


class Letter:
    """One letter of a shuffle word: either the plain letter or a marked one.

    ``mark is None`` encodes the unmarked letter (written ``0``); otherwise
    the letter carries a group element.
    """

    __slots__ = ("mark",)

    def __init__(self, mark: GroupElement | None) -> None:
        self.mark = mark

    @property
    def is_zero(self) -> bool:
        return self.mark is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Letter) and self.mark == other.mark

    def __hash__(self) -> int:
        return hash(self.mark)

    def __repr__(self) -> str:
        return f"Letter({self.mark!r})"

    def __str__(self) -> str:
        if self.mark is None:
            return "0"
        if self.mark.is_identity:
            return "1"
        return f"[{self.mark}]"

    def sort_key(self):
        if self.mark is None:
            return (0, Fraction(0))
        return (1, self.mark.angle)


X0 = Letter(None)
X1 = Letter(ONE)


class ShuffleWord:
    """A finite sequence of letters; the empty word is the algebra unit."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()) -> None:
        self.letters = tuple(letters)
        self._hash = hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def encodes_index_word(self) -> bool:
        """Empty, or ends in a marked letter (domain of the block encoding)."""
        return not self.letters or not self.letters[-1].is_zero

    @property
    def is_convergent(self) -> bool:
        """Additionally starts with a letter other than the identity-marked one."""
        if not self.letters:
            return True
        first = self.letters[0]
        leading_ok = first.is_zero or not first.mark.is_identity
        return leading_ok and not self.letters[-1].is_zero

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ShuffleWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ShuffleWord({str(self)!r})"

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)

    def sort_key(self):
        return tuple(a.sort_key() for a in self.letters)


class IndexedWord:
    """A word of (exponent, mark) pairs; the empty word is the unit.

    Weight is the sum of exponents, depth the number of pairs.  A nonempty
    word is admissible exactly when its leading pair is not ``(1, identity)``,
    which is the condition for the attached nested series to converge
    absolutely or conditionally.
    """

    __slots__ = ("pairs", "_hash")

    def __init__(self, pairs: Iterable[tuple[int, GroupElement]] = ()) -> None:
        pairs = tuple(pairs)
        for s, _ in pairs:
            if s < 1:
                raise ValueError(f"exponent {s} must be >= 1")
        self.pairs = pairs
        self._hash = hash(pairs)

    @classmethod
    def from_parts(cls, exponents: Iterable[int],
                   marks: Iterable[GroupElement] | None = None) -> "IndexedWord":
        exponents = tuple(exponents)
        if marks is None:
            marks = (ONE,) * len(exponents)
        else:
            marks = tuple(marks)
        if len(marks) != len(exponents):
            raise ValueError("exponent and mark vectors differ in length")
        return cls(zip(exponents, marks))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def marks(self) -> tuple[GroupElement, ...]:
        return tuple(b for _, b in self.pairs)

    @property
    def weight(self) -> int:
        return sum(s for s, _ in self.pairs)

    @property
    def depth(self) -> int:
        return len(self.pairs)

    @property
    def is_admissible(self) -> bool:
        if not self.pairs:
            return False
        s1, b1 = self.pairs[0]
        return not (s1 == 1 and b1.is_identity)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IndexedWord) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"IndexedWord({str(self)!r})"

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        exps = ",".join(str(s) for s, _ in self.pairs)
        if all(b.is_identity for _, b in self.pairs):
            return f"({exps})"
        marks = ",".join(str(b) for _, b in self.pairs)
        return f"({exps}|{marks})"

    def sort_key(self):
        return (self.exponents, tuple(b.angle for b in self.marks))


class LinComb:
    """A finite integer linear combination of basis words.

    Words must be hashable and expose ``sort_key()``; iteration via
    :meth:`items` is in that canonical order, so printed output is stable.
    Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self,
                 terms: Mapping | Iterable[tuple[object, int]] = ()) -> None:
        data: dict = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for word, c in pairs:
            if c:
                c0 = data.get(word, 0) + c
                if c0:
                    data[word] = c0
                elif word in data:
                    del data[word]
        self._terms = data

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def single(cls, word, coeff: int = 1) -> "LinComb":
        return cls(((word, coeff),))

    def coeff(self, word) -> int:
        return self._terms.get(word, 0)

    def items(self) -> list[tuple[object, int]]:
        """Terms sorted by the canonical word order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def iterterms(self) -> Iterator[tuple[object, int]]:
        """Unordered view of the terms; prefer :meth:`items` for output."""
        return iter(self._terms.items())

    def words(self) -> list:
        return [w for w, _ in self.items()]

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, word) -> bool:
        return word in self._terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinComb) and self._terms == other._terms

    def __add__(self, other: "LinComb") -> "LinComb":
        data = dict(self._terms)
        for word, c in other._terms.items():
            c0 = data.get(word, 0) + c
            if c0:
                data[word] = c0
            elif word in data:
                del data[word]
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __mul__(self, scalar: int) -> "LinComb":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LinComb()
        out = LinComb.__new__(LinComb)
        out._terms = {w: scalar * c for w, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def map_words(self, f: Callable) -> "LinComb":
        """Relabel every basis word through ``f`` (a word-to-word map)."""
        data: dict = {}
        for word, c in self._terms.items():
            key = f(word)
            c0 = data.get(key, 0) + c
            if c0:
                data[key] = c0
            elif key in data:
                del data[key]
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def apply(self, f: Callable) -> "LinComb":
        """Linear extension of a word-to-LinComb map."""
        data: dict = {}
        for word, c in self._terms.items():
            for w2, c2 in f(word).iterterms():
                c0 = data.get(w2, 0) + c * c2
                if c0:
                    data[w2] = c0
                elif w2 in data:
                    del data[w2]
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        body = " + ".join(f"{c}*{w}" for w, c in self.items())
        return f"LinComb({body})"


def bilinear(word_product: Callable, x: LinComb, y: LinComb) -> LinComb:
    """Extend a word-pair product (returning a LinComb) bilinearly."""
    data: dict = {}
    for u, cu in x.iterterms():
        for v, cv in y.iterterms():
            scale = cu * cv
            for w, c in word_product(u, v).iterterms():
                c0 = data.get(w, 0) + scale * c
                if c0:
                    data[w] = c0
                elif w in data:
                    del data[w]
    out = LinComb.__new__(LinComb)
    out._terms = data
    return out
