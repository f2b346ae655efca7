"""Exact arithmetic in the ring Q[z, 1/(1-z)].

Every value this package evaluates lives in the subring of rational
functions generated by z and 1/(1-z), so a single distinguished
denominator suffices: a RatFun is P(z)/(1-z)^d with P a dense list of
Fraction coefficients and d >= 0.  Canonical form requires that P have
no trailing zero coefficients and, when d > 0, that (1-z) not divide
P, which is equivalent to P(1) != 0.  Reduction therefore never needs
a gcd: evaluate P at 1 and divide synthetically while it vanishes.

Beyond the ring operations the module provides the two operators that
generate all polylogarithm values here: the Euler operator z d/dz and
multiplication by z/(1-z), plus exact Taylor coefficient extraction
via coeff(z^n, 1/(1-z)^d) = C(n+d-1, d-1).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "RatFun",
    "euler_deriv",
    "geom_mul",
    "taylor_coeffs",
]

Scalar = Union[int, Fraction]


def _mul_one_minus_z(coeffs: Sequence[Fraction]) -> list[Fraction]:
    out = list(coeffs) + [Fraction(0)]
    for i in range(len(out) - 1, 0, -1):
        out[i] -= coeffs[i - 1]
    return out


class RatFun:
    """A canonical rational function P(z)/(1-z)^d."""

    __slots__ = ("num", "dpow")

    def __init__(self, num: Iterable[Scalar] = (), dpow: int = 0) -> None:
        if not isinstance(dpow, int) or dpow < 0:
            raise ValueError("denominator power must be an integer >= 0")
        coeffs = [Fraction(c) for c in num]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        # P(1) == 0 exactly when (1-z) divides P; peel those factors off.
        while dpow > 0 and coeffs and sum(coeffs) == 0:
            quot: list[Fraction] = []
            acc = Fraction(0)
            for c in coeffs[:-1]:
                acc += c
                quot.append(acc)
            coeffs = quot
            dpow -= 1
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        if not coeffs:
            dpow = 0
        self.num = tuple(coeffs)
        self.dpow = dpow

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFun":
        return cls()

    @classmethod
    def one(cls) -> "RatFun":
        return cls((1,))

    @classmethod
    def const(cls, c: Scalar) -> "RatFun":
        return cls((Fraction(c),))

    # inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    @property
    def degree(self) -> int:
        """Degree of the numerator; -1 for the zero function."""
        return len(self.num) - 1

    @property
    def value_at_zero(self) -> Fraction:
        return self.num[0] if self.num else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.dpow == other.dpow

    def __hash__(self) -> int:
        return hash((self.num, self.dpow))

    # arithmetic -----------------------------------------------------------

    def _raised_num(self, target_dpow: int) -> list[Fraction]:
        """Numerator after rewriting over the denominator (1-z)^target_dpow."""
        out = list(self.num)
        for _ in range(target_dpow - self.dpow):
            out = _mul_one_minus_z(out)
        return out

    def __add__(self, other: Union["RatFun", Scalar]) -> "RatFun":
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        d = max(self.dpow, other.dpow)
        a = self._raised_num(d)
        b = other._raised_num(d)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatFun(out, d)

    def __radd__(self, other: Scalar) -> "RatFun":
        return self + other

    def __neg__(self) -> "RatFun":
        return RatFun([-c for c in self.num], self.dpow)

    def __sub__(self, other: Union["RatFun", Scalar]) -> "RatFun":
        return self + (-other if isinstance(other, RatFun) else RatFun.const(-Fraction(other)))

    def __rsub__(self, other: Scalar) -> "RatFun":
        return RatFun.const(other) - self

    def __mul__(self, other: Union["RatFun", Scalar]) -> "RatFun":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return RatFun([c * a for a in self.num], self.dpow)
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFun.zero()
        out = [Fraction(0)] * (len(self.num) + len(other.num) - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    out[i + j] += a * b
        return RatFun(out, self.dpow + other.dpow)

    def __rmul__(self, other: Scalar) -> "RatFun":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "RatFun":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be an integer >= 0")
        out = RatFun.one()
        for _ in range(n):
            out = out * self
        return out

    # display --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.num:
            return "0"
        top = _poly_str(self.num)
        if self.dpow == 0:
            return top
        nonzero = sum(1 for c in self.num if c)
        if nonzero > 1:
            top = f"({top})"
        den = "(1-z)" if self.dpow == 1 else f"(1-z)^{self.dpow}"
        return f"{top}/{den}"

    def coeff_str(self) -> str:
        """Machine-oriented form ((c0,c1,...,ck))/(1-z)^d."""
        body = ",".join(str(c) for c in self.num) if self.num else "0"
        return f"(({body}))/(1-z)^{self.dpow}"

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.dpow!r})"

    # serialization ----------------------------------------------------------

    def to_json_obj(self) -> dict[str, object]:
        return {"num": [str(c) for c in self.num], "dpow": self.dpow}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, object]) -> "RatFun":
        num = [Fraction(c) for c in obj["num"]]  # type: ignore[union-attr]
        return cls(num, int(obj["dpow"]))  # type: ignore[arg-type]


def _term_str(coef: Fraction, deg: int) -> str:
    if deg == 0:
        return str(coef)
    z = "z" if deg == 1 else f"z^{deg}"
    if coef == 1:
        return z
    if coef == -1:
        return f"-{z}"
    if coef.denominator == 1:
        return f"{coef}{z}"
    return f"({coef}){z}"


def _poly_str(coeffs: Sequence[Fraction]) -> str:
    chunks: list[str] = []
    for deg, c in enumerate(coeffs):
        if not c:
            continue
        term = _term_str(abs(c), deg)
        if not chunks:
            chunks.append(_term_str(c, deg))
        else:
            chunks.append(f"-{term}" if c < 0 else f"+{term}")
    return "".join(chunks)


def euler_deriv(f: RatFun) -> RatFun:
    """The Euler operator z d/dz, exact on P/(1-z)^d.

    z d/dz (P/(1-z)^d) = z (P'(z)(1-z) + d P(z)) / (1-z)^(d+1).
    """
    if f.is_zero():
        return RatFun.zero()
    dp = [(j + 1) * f.num[j + 1] for j in range(len(f.num) - 1)]
    inner = _mul_one_minus_z(dp)
    if len(inner) < len(f.num):
        inner += [Fraction(0)] * (len(f.num) - len(inner))
    for i, c in enumerate(f.num):
        inner[i] += f.dpow * c
    return RatFun([Fraction(0)] + inner, f.dpow + 1)


def geom_mul(f: RatFun) -> RatFun:
    """Multiply by z/(1-z)."""
    if f.is_zero():
        return RatFun.zero()
    return RatFun((Fraction(0),) + f.num, f.dpow + 1)


def taylor_coeffs(f: RatFun, n_max: int) -> list[Fraction]:
    """Coefficients of z^0..z^n_max in the expansion around 0.

    1/(1-z)^d = sum_n C(n+d-1, d-1) z^n, so the coefficient of z^n is
    sum_j P_j C(n-j+d-1, d-1).
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if f.dpow == 0:
        return [f.num[n] if n < len(f.num) else Fraction(0) for n in range(n_max + 1)]
    d = f.dpow
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        for j, c in enumerate(f.num):
            if j > n:
                break
            if c:
                acc += c * comb(n - j + d - 1, d - 1)
        out.append(acc)
    return out
