"""Polylogarithms at non-positive integer indices and their relations.

For a plain index s = (s1,...,sr) define

    Li(s)(z) = sum_{n1 > n2 > ... > nr > 0} n1^s1 ... nr^sr z^n1,

with Li(()) = 1.  Each of these series is a rational function in
Q[z, 1/(1-z)]: peeling the outermost summation index turns the series
over (s1,...,sr) into the Euler operator applied s1 times to z/(1-z)
times the series over (s2,...,sr), so the whole value is produced by
alternately multiplying by z/(1-z) and differentiating.  That
recursion is the definition used here; every expansion theorem is
verified against it, never used to define it.

The linear extension of s -> Li(s) to formal Q-combinations of indices
(LinComb) has a large kernel, i.e. the indices satisfy many Q-linear
functional equations.  Two constructions from the Magnus basis produce
and certify them:

  * expand_to_products / magnus_product_identity relate a single Li
    value to products of depth-one values through the basis change,
  * kernel_element maps the difference M(k) - M(sigma(k)) of a Magnus
    polynomial and a slot permutation of it through the word-splitting
    isomorphism; the result is always annihilated by Li.

verify_relation decides kernel membership by exact evaluation and
cross-checks the rational-function pipeline against an independent
truncated-series pipeline; disagreement between the two raises
RuntimeError instead of picking a winner.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .freealg import NcPoly, poly_x_to_y
from .magnus import magnus_poly, word_to_magnus
from .ratpoly import RatFun, euler_deriv, geom_mul, taylor_coeffs
from .words import MultiIndex

__all__ = [
    "LinComb",
    "polylog_rational",
    "polylog_map",
    "series_coeffs",
    "series_coeffs_by_chains",
    "expand_to_products",
    "product_letter_word",
    "nfold_product",
    "magnus_product_identity",
    "kernel_element",
    "verify_relation",
    "relation_record",
    "relation_from_record",
]

Scalar = Union[int, Fraction]

_X1 = NcPoly.monomial("X", (1,))


def _require_plain(s: MultiIndex) -> None:
    if not isinstance(s, MultiIndex) or s.magnus:
        raise ValueError(f"expected a plain index like (1,2), got {s}")


def _index_key(idx: MultiIndex) -> tuple[int, tuple[int, ...]]:
    # Same order as the corresponding Y-words in freealg: graded
    # lexicographic through the embedding y_k -> x0^k x1.
    xs: list[int] = []
    for e in idx.entries:
        xs.extend([0] * e)
        xs.append(1)
    return (len(xs), tuple(xs))


class LinComb:
    """A formal Q-linear combination of plain indices."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[MultiIndex, Scalar], Iterable[tuple[MultiIndex, Scalar]], None] = None,
    ) -> None:
        clean: dict[MultiIndex, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for idx, coef in items:
                _require_plain(idx)
                c = clean.get(idx, Fraction(0)) + Fraction(coef)
                if c:
                    clean[idx] = c
                elif idx in clean:
                    del clean[idx]
        self._terms = clean

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, idx: MultiIndex) -> Fraction:
        return self._terms.get(idx, Fraction(0))

    def items(self) -> list[tuple[MultiIndex, Fraction]]:
        """Terms sorted like their Y-word images (graded lex via the X-embedding)."""
        return sorted(self._terms.items(), key=lambda kv: _index_key(kv[0]))

    def __iter__(self) -> Iterator[tuple[MultiIndex, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for idx, c in other._terms.items():
            s = out.get(idx, Fraction(0)) + c
            if s:
                out[idx] = s
            elif idx in out:
                del out[idx]
        return LinComb(out)

    def __neg__(self) -> "LinComb":
        return LinComb({idx: -c for idx, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Scalar) -> "LinComb":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return LinComb({idx: Fraction(other) * c for idx, c in self._terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for idx, coef in self.items():
            mag = abs(coef)
            body = f"Li{idx}" if mag == 1 else f"{mag}*Li{idx}"
            if not chunks:
                chunks.append(f"-{body}" if coef < 0 else body)
            else:
                chunks.append(f" - {body}" if coef < 0 else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"LinComb({self._terms!r})"


@lru_cache(maxsize=None)
def _polylog_entries(entries: tuple[int, ...]) -> RatFun:
    f = RatFun.one()
    for e in reversed(entries):
        f = geom_mul(f)
        for _ in range(e):
            f = euler_deriv(f)
    return f


def polylog_rational(s: MultiIndex) -> RatFun:
    """Li(s) as a canonical element of Q[z, 1/(1-z)].

    Built right to left: start from 1 and, for each entry from the
    innermost out, multiply by z/(1-z) and apply the Euler operator
    entry-many times.  Vanishes at z = 0 whenever the depth is >= 1.
    """
    _require_plain(s)
    return _polylog_entries(s.entries)


def polylog_map(c: LinComb) -> RatFun:
    """Linear extension of polylog_rational to formal combinations."""
    out = RatFun.zero()
    for idx, coef in c.items():
        out = out + coef * polylog_rational(idx)
    return out


def series_coeffs(s: MultiIndex, n_max: int) -> list[int]:
    """Coefficients of z^0..z^n_max of Li(s), by the triangular recursion.

    Summing over the innermost index first: with g_r(m) = m^(s_r) and
    g_j(m) = m^(s_j) * sum_{m > l > 0} g_(j+1)(l), the coefficient of
    z^n is g_1(n).  Prefix sums keep the cost at depth * n_max.
    """
    _require_plain(s)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if not s.entries:
        return [1] + [0] * n_max
    g: list[int] | None = None
    for e in reversed(s.entries):
        if g is None:
            g = [0] + [m**e for m in range(1, n_max + 1)]
        else:
            prefix = 0
            new = [0] * (n_max + 1)
            for m in range(1, n_max + 1):
                prefix += g[m - 1]
                new[m] = m**e * prefix
            g = new
    assert g is not None
    return g


def series_coeffs_by_chains(s: MultiIndex, n_max: int) -> list[int]:
    """Same coefficients by enumerating the chains n > n2 > ... > nr > 0.

    Exponential in the depth; kept as an independent oracle for small
    inputs, not for production use.
    """
    _require_plain(s)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if not s.entries:
        return [1] + [0] * n_max
    r = s.depth
    out = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        total = 0
        for lower in itertools.combinations(range(1, n), r - 1):
            chain = (n,) + tuple(sorted(lower, reverse=True))
            prod = 1
            for ni, si in zip(chain, s.entries):
                prod *= ni**si
            total += prod
        out[n] = total
    return out


def expand_to_products(s: MultiIndex) -> dict[MultiIndex, int]:
    """Write Li(s1,...,sr) as a sum of r-fold products of depth-one values.

    Reading s in tail form, the word-to-Magnus coefficients give

        Li(s) = sum_k <s,k> Li(k1) ... Li(kn) Li(kinf),

    so the returned mapping sends each magnus index k to the integer
    coefficient of the product it labels.
    """
    _require_plain(s)
    if s.depth == 0:
        raise ValueError("the empty index has no product expansion; Li(()) = 1")
    return word_to_magnus(MultiIndex(s.entries, magnus=True))


def product_letter_word(m: int, w: MultiIndex) -> LinComb:
    """Expand Li(m) * Li(w) for a plain non-empty w = (r, w').

    Li(m)*Li(r,w') = sum_{k=0}^{m} (-1)^k C(m,k) Li(m-k, r+k, w').
    """
    if not isinstance(m, int) or m < 0:
        raise ValueError("the single index must be an integer >= 0")
    _require_plain(w)
    if not w.entries:
        raise ValueError("w must be non-empty; multiply by Li(()) = 1 directly")
    r, rest = w.entries[0], w.entries[1:]
    terms = {
        MultiIndex((m - k, r + k) + rest): Fraction((-1) ** k * comb(m, k))
        for k in range(m + 1)
    }
    return LinComb(terms)


def nfold_product(factors: Sequence[int]) -> LinComb:
    """Expand Li(s1) * ... * Li(sn) into depth-n indices in closed form.

    The sum runs over 0 <= k_j <= s_j for j < n, with coefficient
    prod_j (-1)^(k_j) C(s_j, k_j) on the index
    (s1-k1, s2-k2+k1, ..., s_(n-1)-k_(n-1)+k_(n-2), sn+k_(n-1)).
    Equals the result of folding product_letter_word from the right.
    """
    fac = tuple(factors)
    if not fac:
        raise ValueError("need at least one factor")
    for f in fac:
        if not isinstance(f, int) or f < 0:
            raise ValueError(f"bad factor {f!r}: factors are integers >= 0")
    n = len(fac)
    if n == 1:
        return LinComb({MultiIndex((fac[0],)): Fraction(1)})
    terms: dict[MultiIndex, Fraction] = {}
    for ks in itertools.product(*(range(s + 1) for s in fac[:-1])):
        coef = 1
        entries = [fac[0] - ks[0]]
        for j in range(1, n - 1):
            entries.append(fac[j] - ks[j] + ks[j - 1])
        entries.append(fac[-1] + ks[-1])
        for s, k in zip(fac, ks):
            coef *= (-1) ** k * comb(s, k)
        idx = MultiIndex(tuple(entries))
        acc = terms.get(idx, Fraction(0)) + coef
        if acc:
            terms[idx] = acc
        elif idx in terms:
            del terms[idx]
    return LinComb(terms)


def _lincomb_from_y_poly(p: NcPoly) -> LinComb:
    return LinComb((MultiIndex(letters), coef) for letters, coef in p.sorted_terms())


def magnus_product_identity(k: MultiIndex) -> tuple[LinComb, LinComb]:
    """Both expansions of Li(k1)...Li(kn)Li(kinf) for a magnus index k.

    The left component is the closed n-fold product expansion; the
    right one reads M(k) x1 through the word-splitting isomorphism.
    The two are equal term by term, which is exactly what makes the
    permutation construction below land in the kernel.
    """
    if not isinstance(k, MultiIndex) or not k.magnus:
        raise ValueError(f"expected a magnus index like (1;2), got {k}")
    left = nfold_product(k.prefix + (k.tail,))
    right = _lincomb_from_y_poly(poly_x_to_y(magnus_poly(k) * _X1))
    return left, right


def kernel_element(k: MultiIndex, sigma: Sequence[int]) -> LinComb:
    """The kernel combination read off M(k) - M(sigma(k)), times x1.

    sigma permutes all depth+1 slots of k, the tail included, in
    one-line notation: sigma = (2, 1) swaps the two slots of (1;2).
    The image under Li is zero because both Magnus polynomials expand
    the same (commutative) product of depth-one values.
    """
    if not isinstance(k, MultiIndex) or not k.magnus:
        raise ValueError(f"expected a magnus index like (1;2), got {k}")
    r = k.depth + 1
    sig = tuple(int(x) for x in sigma)
    if sorted(sig) != list(range(1, r + 1)):
        raise ValueError(f"sigma must be a permutation of 1..{r} in one-line notation, got {sig}")
    permuted = MultiIndex(tuple(k.entries[i - 1] for i in sig), magnus=True)
    diff = magnus_poly(k) - magnus_poly(permuted)
    return _lincomb_from_y_poly(poly_x_to_y(diff * _X1))


def verify_relation(c: LinComb, n_check: int = 40) -> tuple[bool, RatFun | None]:
    """Decide whether Li maps the combination to zero, with a witness.

    Evaluates through two independent pipelines: the exact rational
    form, and integer series coefficients up to n_check combined with
    the exact coefficients of the combination.  The truncated series of
    the rational value must agree with the direct series; any mismatch
    means one of the pipelines is broken and raises RuntimeError.
    Returns (True, None) on kernel membership, else (False, witness)
    with the nonzero rational value.
    """
    f = polylog_map(c)
    direct = [Fraction(0)] * (n_check + 1)
    for idx, coef in c.items():
        sc = series_coeffs(idx, n_check)
        for n in range(n_check + 1):
            if sc[n]:
                direct[n] += coef * sc[n]
    if taylor_coeffs(f, n_check) != direct:
        raise RuntimeError("rational and series pipelines disagree; refusing to answer")
    if f.is_zero():
        return True, None
    return False, f


def relation_record(c: LinComb, verified: bool) -> dict[str, object]:
    """The JSON-line record for a relation: terms, verified, weight, depth.

    Weight and depth are the common values over all terms, or null
    when the combination is not homogeneous (products of depth-one
    values reduce to lower weight, so mixed records are legitimate).
    """
    terms = [
        {"coef": str(coef), "index": list(idx.entries)} for idx, coef in c.items()
    ]
    weights = {idx.weight for idx, _ in c.items()}
    depths = {idx.depth for idx, _ in c.items()}
    return {
        "terms": terms,
        "verified": verified,
        "weight": weights.pop() if len(weights) == 1 else None,
        "depth": depths.pop() if len(depths) == 1 else None,
    }


def relation_from_record(obj: Mapping[str, object]) -> LinComb:
    """Parse the terms of a relation record; raises ValueError when malformed."""
    if not isinstance(obj, Mapping) or "terms" not in obj:
        raise ValueError("relation record must be an object with a 'terms' array")
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise ValueError("'terms' must be an array")
    out: list[tuple[MultiIndex, Fraction]] = []
    for i, item in enumerate(terms):
        if not isinstance(item, Mapping) or "coef" not in item or "index" not in item:
            raise ValueError(f"term {i} must be an object with 'coef' and 'index'")
        try:
            coef = Fraction(str(item["coef"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"term {i} has a bad coefficient {item['coef']!r}") from exc
        index = item["index"]
        if not isinstance(index, list) or not all(isinstance(e, int) for e in index):
            raise ValueError(f"term {i} has a bad index {index!r}")
        out.append((MultiIndex(tuple(index)), coef))
    return LinComb(out)
