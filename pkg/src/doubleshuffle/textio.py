"""Word grammar, linear-combination formatting, JSON and LaTeX emitters.

Grammar accepted by the parsers (whitespace between tokens is ignored):

* index words:   ``(s1,...,sk | p1/q1,...,pk/qk)`` with each exponent a
  positive integer and each mark a fraction of a full turn; ``(s1,...,sk)``
  abbreviates all-identity marks and ``1`` is the empty word;
* letter words:  a string of tokens ``0`` and ``[p/q]``, with ``1`` short
  for ``[0/1]``; the empty string is the empty word.

``parse . format`` is the identity on canonical forms.  JSON terms carry
coefficients as decimal strings so arbitrary-precision values survive the
round trip.
"""

from __future__ import annotations

from .core import GroupElement, IndexedWord, Letter, LinComb, ShuffleWord
from .values import PRODUCT_KINDS, ZERO_SUM_KINDS, Relation


class WordSyntaxError(ValueError):
    """A malformed word, with the offending position (0-based)."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"column {pos}: {message}")


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.i = 0

    def error(self, message: str, pos: int | None = None) -> Exception:
        return WordSyntaxError(message, self.text, self.i if pos is None else pos)

    def skip_ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else None

    def take(self) -> str:
        ch = self.text[self.i]
        self.i += 1
        return ch

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.take()

    def at_end(self) -> bool:
        return self.peek() is None

    def read_int(self, what: str) -> int:
        self.skip_ws()
        start = self.i
        if self.i < len(self.text) and self.text[self.i] == "-":
            self.i += 1
        digits = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits:
            raise self.error(f"expected {what}", start)
        return int(self.text[start:self.i])

    def read_fraction(self) -> GroupElement:
        start = self.i
        num = self.read_int("a fraction numerator")
        if self.peek() != "/":
            raise self.error("malformed fraction: expected '/'")
        self.take()
        den = self.read_int("a fraction denominator")
        if den < 1:
            raise self.error("malformed fraction: denominator must be positive", start)
        return GroupElement(num, den)


def parse_indexed_word(text: str) -> IndexedWord:
    """Parse the ``(s|m)`` grammar; ``1`` is the empty word."""
    sc = _Scanner(text)
    if sc.peek() == "1":
        sc.take()
        if not sc.at_end():
            raise sc.error("unexpected input after the empty word")
        return IndexedWord()
    if sc.peek() != "(":
        raise sc.error("expected '(' or the empty word '1'")
    sc.take()
    exponents: list[int] = []
    positions: list[int] = []
    while True:
        sc.skip_ws()
        positions.append(sc.i)
        exponents.append(sc.read_int("an exponent"))
        if sc.peek() == ",":
            sc.take()
            continue
        break
    for pos, s in zip(positions, exponents):
        if s < 1:
            raise sc.error(f"exponent {s} must be >= 1", pos)
    marks: list[GroupElement] | None = None
    if sc.peek() == "|":
        sc.take()
        marks = []
        while True:
            marks.append(sc.read_fraction())
            if sc.peek() == ",":
                sc.take()
                continue
            break
        if len(marks) != len(exponents):
            raise sc.error(f"{len(exponents)} exponents but {len(marks)} marks")
    if sc.peek() != ")":
        raise sc.error("unbalanced delimiters: expected ')'")
    sc.take()
    if not sc.at_end():
        raise sc.error("unexpected input after ')'")
    return IndexedWord.from_parts(exponents, marks)


def parse_shuffle_word(text: str) -> ShuffleWord:
    """Parse a string of letter tokens; the empty string is the empty word."""
    sc = _Scanner(text)
    letters: list[Letter] = []
    while not sc.at_end():
        ch = sc.peek()
        if ch == "0":
            sc.take()
            letters.append(Letter(None))
        elif ch == "1":
            sc.take()
            letters.append(Letter(GroupElement(0, 1)))
        elif ch == "[":
            sc.take()
            mark = sc.read_fraction()
            if sc.peek() != "]":
                raise sc.error("unbalanced delimiters: expected ']'")
            sc.take()
            letters.append(Letter(mark))
        else:
            raise sc.error(f"unexpected character {ch!r}")
    return ShuffleWord(letters)


def format_indexed_word(word: IndexedWord) -> str:
    return str(word)


def format_shuffle_word(word: ShuffleWord) -> str:
    return str(word)


def format_lincomb(lc: LinComb) -> str:
    """Byte-stable text: terms in canonical order, e.g. ``2*(2,2) + 4*(3,1)``."""
    if not lc:
        return "0"
    parts: list[str] = []
    for word, c in lc.items():
        body = str(c if not parts else abs(c))
        if len(word) > 0:
            body += f"*{word}"
        if not parts:
            parts.append(body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# JSON


def word_to_json(word: IndexedWord) -> dict:
    return {"s": list(word.exponents), "m": [str(b) for b in word.marks]}


def word_from_json(d: dict) -> IndexedWord:
    marks = [_fraction_from_str(m) for m in d["m"]]
    return IndexedWord.from_parts([int(s) for s in d["s"]], marks)


def _fraction_from_str(text: str) -> GroupElement:
    num, _, den = text.partition("/")
    if not den:
        raise WordSyntaxError("malformed fraction: expected 'p/q'", text, 0)
    try:
        return GroupElement(int(num), int(den))
    except ValueError as exc:
        raise WordSyntaxError(f"malformed fraction: {exc}", text, 0) from None


def lincomb_to_json(lc: LinComb) -> dict:
    """Schema: {"terms": [{"coeff": "<decimal>", "s": [...], "m": [...]}]}."""
    terms = []
    for word, c in lc.items():
        entry = {"coeff": str(c)}
        entry.update(word_to_json(word))
        terms.append(entry)
    return {"terms": terms}


def lincomb_from_json(d: dict) -> LinComb:
    return LinComb((word_from_json(t), int(t["coeff"])) for t in d["terms"])


def relation_to_json(rel: Relation) -> dict:
    return {"kind": rel.kind,
            "factors": [word_to_json(w) for w in rel.factors],
            "terms": lincomb_to_json(rel.combination)["terms"]}


def relation_from_json(d: dict) -> Relation:
    kind = d.get("kind", "double-shuffle")
    if kind not in ZERO_SUM_KINDS | PRODUCT_KINDS:
        raise WordSyntaxError(f"unknown relation kind {kind!r}", str(d), 0)
    factors = tuple(word_from_json(w) for w in d.get("factors", []))
    return Relation(kind, factors, lincomb_from_json(d))


# ---------------------------------------------------------------------------
# LaTeX


def _latex_style(words, group: str) -> str:
    marks = [b for w in words for b in w.marks]
    if all(b.is_identity for b in marks):
        return "zeta" if group in ("trivial", "sign") else "li"
    if all(b.den <= 2 for b in marks) and group in ("trivial", "sign"):
        return "zeta-sign"
    return "li"


def _mark_latex(b: GroupElement) -> str:
    if b.is_identity:
        return "1"
    if b.den == 2:
        return "-1"
    if b.den == 4:
        return "i" if b.num == 1 else "-i"
    return rf"e^{{2\pi i \cdot {b.num}/{b.den}}}"


def word_to_latex(word: IndexedWord, style: str) -> str:
    if word.depth == 0:
        return "1"
    exps = ",".join(str(s) for s in word.exponents)
    if style == "zeta":
        return rf"\zeta({exps})"
    if style == "zeta-sign":
        sigma = ",".join(_mark_latex(b) for b in word.marks)
        return rf"\zeta({exps};{sigma})"
    args = ",".join(_mark_latex(b) for b in word.marks)
    return rf"\operatorname{{Li}}_{{{exps}}}({args})"


def lincomb_to_latex(lc: LinComb, group: str = "trivial") -> str:
    if not lc:
        return "0"
    style = _latex_style(lc.words(), group)
    parts: list[str] = []
    for word, c in lc.items():
        mag = abs(c)
        body = word_to_latex(word, style)
        if mag != 1 or word.depth == 0:
            body = f"{mag}{body}" if word.depth else str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def relation_to_latex(rel: Relation, group: str = "trivial") -> str:
    style = _latex_style(list(rel.factors) + rel.combination.words(), group)
    rhs = lincomb_to_latex(rel.combination, group)
    if rel.is_zero_sum:
        return f"{rhs} = 0"
    lhs = "".join(word_to_latex(w, style) for w in rel.factors)
    return f"{lhs} = {rhs}"
