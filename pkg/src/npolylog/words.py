"""Alphabets, words, and the index notation shared by the whole package.

Two alphabets appear throughout.  X = {x0, x1} generates the free
associative algebra whose Magnus-type basis drives all expansions, and
the countable alphabet Y = {y0, y1, ...} encodes polylogarithm indices
letter by letter.  A plain index (s1,...,sr) stands for the nested
series sum_{n1>...>nr>0} n1^s1 ... nr^sr z^n1.  An index written in
tail form (k1,...,kn;kinf) labels a Magnus polynomial; its last entry
is the exponent of a trailing x0 block and does not count toward the
depth.  The two kinds are kept apart by an explicit flag instead of a
caller-side convention.

Text notation: "(1,2,3)" plain, "()" the empty index, "(1;2)" tail
form, "(;2)" tail form of depth 0.  Y-words read "y1y2" or "y1 y2",
with "eps" for the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "MultiIndex",
    "Word",
    "mpl_index",
    "magnus_index",
    "parse_index",
    "to_y_word",
    "to_index",
    "word_y_to_x",
    "word_x_to_y",
    "word_display",
    "word_json",
    "parse_word_json",
    "parse_y_word",
]


@dataclass(frozen=True)
class MultiIndex:
    """An index (s1,...,sr), or (k1,...,kn;kinf) when ``magnus`` is set."""

    entries: tuple[int, ...]
    magnus: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad index entry {e!r}: entries are integers >= 0")
        if self.magnus and not self.entries:
            raise ValueError("a magnus index needs at least its tail entry")

    @property
    def depth(self) -> int:
        """Number of slots; the tail entry of a magnus index is not a slot."""
        return len(self.entries) - 1 if self.magnus else len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def prefix(self) -> tuple[int, ...]:
        if not self.magnus:
            raise ValueError("prefix/tail split applies to magnus indices only")
        return self.entries[:-1]

    @property
    def tail(self) -> int:
        if not self.magnus:
            raise ValueError("prefix/tail split applies to magnus indices only")
        return self.entries[-1]

    def __str__(self) -> str:
        if self.magnus:
            return "({};{})".format(",".join(map(str, self.prefix)), self.tail)
        return "({})".format(",".join(map(str, self.entries)))


def mpl_index(*entries: int) -> MultiIndex:
    return MultiIndex(entries)


def magnus_index(*entries: int) -> MultiIndex:
    """Build a tail-form index; the last argument is the tail entry."""
    return MultiIndex(entries, magnus=True)


def _parse_int(token: str, text: str) -> int:
    tok = token.strip()
    if not re.fullmatch(r"\d+", tok):
        raise ValueError(f"bad token {tok!r} in index {text!r}")
    return int(tok)


def parse_index(text: str) -> MultiIndex:
    """Parse "(1,2)", "()", "(1;2)" or "(;2)" into a MultiIndex."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ValueError(f"index {text!r} must be wrapped in parentheses")
    body = t[1:-1].strip()
    if not body:
        return MultiIndex(())
    if ";" in body:
        head, _, tail = body.partition(";")
        if ";" in tail:
            raise ValueError(f"index {text!r} has more than one ';'")
        entries = [_parse_int(p, text) for p in head.split(",")] if head.strip() else []
        entries.append(_parse_int(tail, text))
        return MultiIndex(tuple(entries), magnus=True)
    return MultiIndex(tuple(_parse_int(p, text) for p in body.split(",")))


@dataclass(frozen=True)
class Word:
    """A word over X (letter codes 0, 1) or Y (codes n >= 0 meaning y_n)."""

    alphabet: str
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.alphabet not in ("X", "Y"):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for c in self.letters:
            if not isinstance(c, int) or c < 0 or (self.alphabet == "X" and c > 1):
                raise ValueError(f"bad letter {c!r} for alphabet {self.alphabet}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        return Word(self.alphabet, self.letters + other.letters)

    def __str__(self) -> str:
        return word_display(self)


def to_y_word(s: MultiIndex) -> Word:
    """(s1,...,sr) -> y_{s1}...y_{sr}; the empty index maps to the empty word."""
    if s.magnus:
        raise ValueError("only plain indices encode Y-words")
    return Word("Y", s.entries)


def to_index(w: Word) -> MultiIndex:
    """Inverse of to_y_word."""
    if w.alphabet != "Y":
        raise ValueError("expected a Y-word")
    return MultiIndex(w.letters)


def word_y_to_x(w: Word) -> Word:
    """The monoid embedding y_s -> x0^s x1, extended multiplicatively."""
    if w.alphabet != "Y":
        raise ValueError("expected a Y-word")
    out: list[int] = []
    for s in w.letters:
        out.extend([0] * s)
        out.append(1)
    return Word("X", tuple(out))


def word_x_to_y(w: Word) -> Word:
    """Inverse of word_y_to_x on its image (X-words ending in x1, plus the empty word)."""
    if w.alphabet != "X":
        raise ValueError("expected an X-word")
    if w.letters and w.letters[-1] != 1:
        raise ValueError(f"not in <X>x1: {word_display(w)}")
    out: list[int] = []
    run = 0
    for c in w.letters:
        if c == 0:
            run += 1
        else:
            out.append(run)
            run = 0
    return Word("Y", tuple(out))


def word_display(w: Word) -> str:
    """Compact human form: "x0x1x0^2", "y1y2", "eps"."""
    if not w.letters:
        return "eps"
    if w.alphabet == "Y":
        return "".join(f"y{c}" for c in w.letters)
    parts: list[str] = []
    i = 0
    while i < len(w.letters):
        j = i
        while j < len(w.letters) and w.letters[j] == w.letters[i]:
            j += 1
        run = j - i
        parts.append(f"x{w.letters[i]}" + (f"^{run}" if run > 1 else ""))
        i = j
    return "".join(parts)


def word_json(w: Word) -> str:
    """Serialized form: "x0x1x0x0" for X, "y1 y2" for Y, "eps" when empty."""
    if not w.letters:
        return "eps"
    if w.alphabet == "X":
        return "".join(f"x{c}" for c in w.letters)
    return " ".join(f"y{c}" for c in w.letters)


def parse_word_json(alphabet: str, text: str) -> Word:
    t = text.strip()
    if t == "eps":
        return Word(alphabet, ())
    if alphabet == "X":
        if not re.fullmatch(r"(?:x[01])+", t):
            raise ValueError(f"bad X-word {text!r}")
        return Word("X", tuple(int(c) for c in re.findall(r"x([01])", t)))
    return parse_y_word(t)


def parse_y_word(text: str) -> Word:
    """Parse "y1y2", "y1 y2" or "eps"."""
    t = text.strip()
    if t == "eps":
        return Word("Y", ())
    if not re.fullmatch(r"(?:\s*y\d+)+", t):
        raise ValueError(f"bad Y-word {text!r}")
    return Word("Y", tuple(int(n) for n in re.findall(r"y(\d+)", t)))
