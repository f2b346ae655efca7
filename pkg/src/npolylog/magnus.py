"""The Magnus polynomial basis of Q<X> and its word-basis change.

Write x1^(0) = x1 and x1^(n+1) = [x0, x1^(n)].  These iterated
brackets expand as

    x1^(n) = sum_{k=0}^{n} (-1)^k C(n, k) x0^(n-k) x1 x0^k,

and for an index k = (k1,...,kn;kinf) the Magnus polynomial is the
product M(k) = x1^(k1) ... x1^(kn) x0^kinf.  The family of all M(k) is
a linear basis of Q<X>; this module computes both directions of the
change between it and the monomial basis, whose elements are labelled
by the same index shape:

    w(s) = x0^(s1) x1 ... x0^(sn) x1 x0^(sinf).

The transition coefficients are products of binomials driven by
cumulative budgets ("array binomials").  In one direction
w(s) = sum_k binom<s,k> M(k); in the other M(k) = sum_s binom<<k,s>> w(s)
with a signed dual coefficient.  Both vanish unless depth and weight
agree, so each graded piece is a finite square matrix and the two
coefficient families are inverse matrices; magnus_basis_check verifies
this, together with the polynomial identities themselves, on every
graded piece up to given bounds.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterator

from .freealg import NcPoly, lie_bracket
from .words import MultiIndex

__all__ = [
    "lie_power",
    "lie_power_by_brackets",
    "magnus_poly",
    "magnus_poly_by_products",
    "basis_word",
    "array_binom",
    "dual_array_binom",
    "magnus_indices",
    "word_to_magnus",
    "magnus_to_word",
    "grade_report",
    "magnus_basis_check",
]

_X0 = NcPoly.monomial("X", (0,))
_X1 = NcPoly.monomial("X", (1,))


def lie_power(n: int) -> NcPoly:
    """x1^(n) via the closed form sum_k (-1)^k C(n,k) x0^(n-k) x1 x0^k."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("bracket order must be an integer >= 0")
    terms = {
        (0,) * (n - k) + (1,) + (0,) * k: Fraction((-1) ** k * comb(n, k))
        for k in range(n + 1)
    }
    return NcPoly("X", terms)


def lie_power_by_brackets(n: int) -> NcPoly:
    """x1^(n) by iterating the bracket recursion; oracle for lie_power."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("bracket order must be an integer >= 0")
    out = _X1
    for _ in range(n):
        out = lie_bracket(_X0, out)
    return out


def _require_magnus(k: MultiIndex) -> None:
    if not isinstance(k, MultiIndex) or not k.magnus:
        raise ValueError(f"expected a magnus index like (1;2), got {k}")


def magnus_poly(k: MultiIndex) -> NcPoly:
    """M(k) = x1^(k1) ... x1^(kn) x0^kinf, expanded directly into words.

    Expanding every bracket gives one word per choice of i_j in
    0..k_j, with coefficient prod_j (-1)^(i_j) C(k_j, i_j) and word
    x0^(k1-i1) x1 x0^(k2-i2+i1) x1 ... x0^(kn-in+i_(n-1)) x1 x0^(kinf+in).
    Distinct choices give distinct words, so the support size is
    exactly prod_j (k_j + 1).
    """
    _require_magnus(k)
    terms: dict[tuple[int, ...], Fraction] = {}
    for choices in itertools.product(*(range(kj + 1) for kj in k.prefix)):
        coef = 1
        letters: list[int] = []
        carry = 0
        for kj, ij in zip(k.prefix, choices):
            coef *= (-1) ** ij * comb(kj, ij)
            letters.extend([0] * (kj - ij + carry))
            letters.append(1)
            carry = ij
        letters.extend([0] * (k.tail + carry))
        terms[tuple(letters)] = Fraction(coef)
    return NcPoly("X", terms)


def magnus_poly_by_products(k: MultiIndex) -> NcPoly:
    """M(k) as an actual product of lie powers; oracle for magnus_poly."""
    _require_magnus(k)
    out = NcPoly.one("X")
    for kj in k.prefix:
        out = out * lie_power(kj)
    return out * NcPoly.monomial("X", (0,) * k.tail)


def basis_word(s: MultiIndex) -> NcPoly:
    """The monomial w(s) = x0^(s1) x1 ... x0^(sn) x1 x0^(sinf)."""
    _require_magnus(s)
    letters: list[int] = []
    for e in s.prefix:
        letters.extend([0] * e)
        letters.append(1)
    letters.extend([0] * s.tail)
    return NcPoly.monomial("X", letters)


def array_binom(s: MultiIndex, k: MultiIndex) -> int:
    """The coefficient of M(k) in w(s): C(s1,k1) C(s1+s2-k1,k2) ...

    The j-th factor draws k_j from the budget sum_(i<=j) s_i minus
    what earlier factors used.  Zero unless depth and weight agree and
    every partial sum of (s_i - k_i) stays >= 0.
    """
    _require_magnus(s)
    _require_magnus(k)
    if s.depth != k.depth or s.weight != k.weight:
        return 0
    budget = 0
    val = 1
    for sj, kj in zip(s.prefix, k.prefix):
        budget += sj
        if budget < kj:
            return 0
        val *= comb(budget, kj)
        budget -= kj
    return val


def dual_array_binom(k: MultiIndex, s: MultiIndex) -> int:
    """The coefficient of w(s) in M(k), a signed product of binomials.

    With the running differences c_j = sum_(i<=j) (k_i - s_i), the
    value is (-1)^(c_1+...+c_n) prod_j C(k_j, c_j); it vanishes unless
    depth and weight agree and every c_j lies in 0..k_j.
    """
    _require_magnus(k)
    _require_magnus(s)
    if k.depth != s.depth or k.weight != s.weight:
        return 0
    c = 0
    total = 0
    val = 1
    for kj, sj in zip(k.prefix, s.prefix):
        c += kj - sj
        if c < 0 or c > kj:
            return 0
        val *= comb(kj, c)
        total += c
    return -val if total % 2 else val


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def magnus_indices(depth: int, weight: int) -> list[MultiIndex]:
    """All magnus indices of the given depth and weight, in lexicographic order."""
    if depth < 0 or weight < 0:
        raise ValueError("depth and weight must be >= 0")
    return [MultiIndex(c, magnus=True) for c in _compositions(weight, depth + 1)]


def word_to_magnus(s: MultiIndex) -> dict[MultiIndex, int]:
    """Nonzero coefficients of w(s) in the Magnus basis."""
    _require_magnus(s)
    out: dict[MultiIndex, int] = {}
    for k in magnus_indices(s.depth, s.weight):
        v = array_binom(s, k)
        if v:
            out[k] = v
    return out


def magnus_to_word(k: MultiIndex) -> dict[MultiIndex, int]:
    """Nonzero coefficients of M(k) in the monomial basis."""
    _require_magnus(k)
    out: dict[MultiIndex, int] = {}
    for s in magnus_indices(k.depth, k.weight):
        v = dual_array_binom(k, s)
        if v:
            out[s] = v
    return out


def grade_report(max_depth: int, max_weight: int) -> list[dict[str, object]]:
    """Check every graded piece with depth <= max_depth, weight <= max_weight.

    For each piece this verifies that the two coefficient matrices are
    mutually inverse (duality) and that the polynomial identities
    w(s) = sum_k <s,k> M(k) and M(k) = sum_s <<k,s>> w(s) hold term by
    term (inversion).  Returns one record per piece.
    """
    cells: list[dict[str, object]] = []
    for depth in range(max_depth + 1):
        for weight in range(max_weight + 1):
            idx = magnus_indices(depth, weight)
            n = len(idx)
            a = [[array_binom(s, k) for k in idx] for s in idx]
            b = [[dual_array_binom(k, s) for s in idx] for k in idx]
            duality_ok = _is_identity(_mat_mul(a, b)) and _is_identity(_mat_mul(b, a))
            inversion_ok = True
            mp = [magnus_poly(k) for k in idx]
            bw = [basis_word(s) for s in idx]
            for i, s in enumerate(idx):
                acc = NcPoly.zero("X")
                for j in range(n):
                    if a[i][j]:
                        acc = acc + a[i][j] * mp[j]
                if acc != bw[i]:
                    inversion_ok = False
            for i, k in enumerate(idx):
                acc = NcPoly.zero("X")
                for j in range(n):
                    if b[i][j]:
                        acc = acc + b[i][j] * bw[j]
                if acc != mp[i]:
                    inversion_ok = False
            cells.append(
                {
                    "depth": depth,
                    "weight": weight,
                    "size": n,
                    "duality_ok": duality_ok,
                    "inversion_ok": inversion_ok,
                    "ok": duality_ok and inversion_ok,
                }
            )
    return cells


def magnus_basis_check(max_depth: int, max_weight: int) -> bool:
    """True when every graded piece in range passes grade_report."""
    return all(cell["ok"] for cell in grade_report(max_depth, max_weight))


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row = a[i]
        for t in range(n):
            v = row[t]
            if v:
                bt = b[t]
                oi = out[i]
                for j in range(n):
                    oi[j] += v * bt[j]
    return out


def _is_identity(m: list[list[int]]) -> bool:
    return all(v == (1 if i == j else 0) for i, row in enumerate(m) for j, v in enumerate(row))
