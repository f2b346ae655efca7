"""Noncommutative polynomials over the word algebras Q<X> and Q<Y>.

An NcPoly is a finite Q-linear combination of words, stored as a
mapping from letter tuples to Fraction coefficients.  Zero
coefficients are dropped eagerly, so equality is plain dictionary
equality and membership tests against the kernel of the polylogarithm
map stay exact.  Display and serialization order terms by word length
and then lexicographically by letter codes, which keeps every output
byte-deterministic.

The module also provides the Lie bracket [u, v] = uv - vu and the
splitting isomorphism between Q<X>x1 and Q<Y>: a word that ends in x1
factors uniquely into blocks x0^k x1, and each block is renamed y_k.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .words import Word, parse_word_json, word_display, word_json

__all__ = [
    "NcPoly",
    "lie_bracket",
    "poly_x_to_y",
    "poly_y_to_x",
    "poly_to_json_obj",
    "poly_from_json_obj",
]

Letters = tuple[int, ...]
Scalar = Union[int, Fraction]
TermsLike = Union[Mapping[Letters, Scalar], Iterable[tuple[Letters, Scalar]], None]


def _check_letters(alphabet: str, letters: Letters) -> None:
    for c in letters:
        if not isinstance(c, int) or c < 0 or (alphabet == "X" and c > 1):
            raise ValueError(f"bad letter {c!r} for alphabet {alphabet}")


def _term_key(alphabet: str, letters: Letters) -> tuple[int, Letters]:
    # Y-words sort through their X-embedding y_k -> x0^k x1 so that the
    # image of a polynomial under the splitting isomorphism keeps the
    # term order of its preimage.
    if alphabet == "Y":
        xs: list[int] = []
        for c in letters:
            xs.extend([0] * c)
            xs.append(1)
        return (len(xs), tuple(xs))
    return (len(letters), letters)


class NcPoly:
    """A noncommutative polynomial over the alphabet "X" or "Y"."""

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: str, terms: TermsLike = None) -> None:
        if alphabet not in ("X", "Y"):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        self.alphabet = alphabet
        clean: dict[Letters, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for letters, coef in items:
                letters = tuple(letters)
                _check_letters(alphabet, letters)
                c = clean.get(letters, Fraction(0)) + Fraction(coef)
                if c:
                    clean[letters] = c
                elif letters in clean:
                    del clean[letters]
        self._terms = clean

    # construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, alphabet: str) -> "NcPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: str) -> "NcPoly":
        return cls(alphabet, {(): Fraction(1)})

    @classmethod
    def monomial(cls, alphabet: str, letters: Iterable[int], coef: Scalar = 1) -> "NcPoly":
        return cls(alphabet, {tuple(letters): Fraction(coef)})

    @classmethod
    def from_word(cls, w: Word, coef: Scalar = 1) -> "NcPoly":
        return cls(w.alphabet, {w.letters: Fraction(coef)})

    # inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, letters: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(letters), Fraction(0))

    def sorted_terms(self) -> list[tuple[Letters, Fraction]]:
        """Terms in the canonical order: graded lexicographic by word length,
        then letter codes, with Y-words measured through their X-embedding."""
        return sorted(self._terms.items(), key=lambda kv: _term_key(self.alphabet, kv[0]))

    def support(self) -> list[Word]:
        return [Word(self.alphabet, ls) for ls, _ in self.sorted_terms()]

    def __iter__(self) -> Iterator[tuple[Letters, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # arithmetic -----------------------------------------------------------

    def _require_same(self, other: "NcPoly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __add__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._require_same(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return NcPoly(self.alphabet, out)

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["NcPoly", Scalar]) -> "NcPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return NcPoly(self.alphabet, {w: c * v for w, v in self._terms.items()})
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._require_same(other)
        out: dict[Letters, Fraction] = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                w = u + v
                s = out.get(w, Fraction(0)) + cu * cv
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return NcPoly(self.alphabet, out)

    def __rmul__(self, other: Scalar) -> "NcPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "NcPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be an integer >= 0")
        out = NcPoly.one(self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for letters, coef in self.sorted_terms():
            mag = abs(coef)
            if not letters:
                body = str(mag)
            elif mag == 1:
                body = word_display(Word(self.alphabet, letters))
            else:
                body = f"{mag}*{word_display(Word(self.alphabet, letters))}"
            if not chunks:
                chunks.append(f"-{body}" if coef < 0 else body)
            else:
                chunks.append(f" - {body}" if coef < 0 else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"NcPoly({self.alphabet!r}, {self._terms!r})"


def lie_bracket(u: NcPoly, v: NcPoly) -> NcPoly:
    """[u, v] = uv - vu."""
    return u * v - v * u


def poly_x_to_y(a: NcPoly) -> NcPoly:
    """Split every support word at its x1 letters and rename x0^k x1 to y_k.

    Defined on Q<X>x1: every support word must be non-empty and end in
    x1 (the zero polynomial is accepted).  Linear, and multiplicative
    whenever both factors stay inside Q<X>x1.
    """
    if a.alphabet != "X":
        raise ValueError("expected a polynomial over X")
    out: dict[Letters, Fraction] = {}
    for letters, coef in a._terms.items():
        if not letters or letters[-1] != 1:
            raise ValueError(f"not in <X>x1: {word_display(Word('X', letters))}")
        ys: list[int] = []
        run = 0
        for c in letters:
            if c == 0:
                run += 1
            else:
                ys.append(run)
                run = 0
        out[tuple(ys)] = coef
    return NcPoly("Y", out)


def poly_y_to_x(b: NcPoly) -> NcPoly:
    """Inverse of poly_x_to_y; the empty Y-word maps to the empty X-word."""
    if b.alphabet != "Y":
        raise ValueError("expected a polynomial over Y")
    out: dict[Letters, Fraction] = {}
    for letters, coef in b._terms.items():
        xs: list[int] = []
        for s in letters:
            xs.extend([0] * s)
            xs.append(1)
        out[tuple(xs)] = coef
    return NcPoly("X", out)


def poly_to_json_obj(a: NcPoly) -> list[dict[str, str]]:
    """Canonically ordered [{"coef": "num/den", "word": ...}, ...]."""
    return [
        {"coef": str(coef), "word": word_json(Word(a.alphabet, letters))}
        for letters, coef in a.sorted_terms()
    ]


def poly_from_json_obj(alphabet: str, obj: Iterable[Mapping[str, str]]) -> NcPoly:
    terms = []
    for item in obj:
        w = parse_word_json(alphabet, item["word"])
        terms.append((w.letters, Fraction(item["coef"])))
    return NcPoly(alphabet, terms)
