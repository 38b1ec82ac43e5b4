"""
Exact dense univariate polynomials over the integers.

Coefficients are Python ints, index = degree. The zero polynomial has an
empty coefficient tuple. Everything here is exact.
"""

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, List, Sequence, Tuple, Union

from app.errors import SeriesNotRationalError


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPoly":
        return cls((0,) * degree + (c,))

    @classmethod
    def binomial_power(cls, k: int, sign: int = 1) -> "IntPoly":
        """(1 + sign*x)^k"""
        return cls(tuple(comb(k, i) * sign ** i for i in range(k + 1)))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        result = IntPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(tuple(k * c for c in self.coeffs))

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k"""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*{var}")
            else:
                terms.append(f"{c}*{var}^{k}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_list(self) -> List[int]:
        return list(self.coeffs)


ZERO = IntPoly()
ONE = IntPoly.constant(1)
X = IntPoly.of(0, 1)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def scale(p: IntPoly, k: int) -> IntPoly:
    return p.scale(k)


def shift_sub(p: IntPoly) -> IntPoly:
    """
    Return p(u-1) as a polynomial in u, i.e. the Taylor coefficients of p at -1.
    """
    # Horner in the u basis: acc <- acc*(u-1) + c
    acc: List[int] = []
    for c in reversed(p.coeffs):
        nxt = [0] * (len(acc) + 1)
        for i, a in enumerate(acc):
            nxt[i + 1] += a
            nxt[i] -= a
        nxt[0] += c
        acc = nxt
    return IntPoly(tuple(acc))


def ord_at_minus1(p: IntPoly) -> Tuple[int, int]:
    """
    Multiplicity of -1 as a root of p and the first nonzero Taylor coefficient there.

    Repeated synthetic division by (x+1).

    Returns:
        (mult, lead)
    """
    if p.is_zero():
        raise ValueError("ord_at_minus1 of the zero polynomial")
    coeffs = list(p.coeffs)
    mult = 0
    while True:
        # divide by (x + 1): quotient q, remainder coeffs(-1)
        deg = len(coeffs) - 1
        q = [0] * deg
        carry = 0
        for k in range(deg, 0, -1):
            carry = coeffs[k] - (q[k] if k < deg else 0)
            q[k - 1] = carry
        remainder = coeffs[0] - (q[0] if deg > 0 else 0)
        if remainder != 0:
            return mult, remainder
        coeffs = q
        mult += 1


def derivative_at(p: IntPoly, k: int, x0: int) -> int:
    """k-th derivative of p evaluated at x0"""
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    total = 0
    for i in range(k, len(p.coeffs)):
        total += p.coeffs[i] * (factorial(i) // factorial(i - k)) * x0 ** (i - k)
    return total


def series_h_extract(hf: Sequence[int], dim: int) -> IntPoly:
    """
    Numerator of a Hilbert series from a truncated Hilbert function.

    Multiplies HF(0..D) by (1-t)^dim. Coefficients up to D are exact, and the
    tail after the numerator must vanish for at least dim+1 terms.

    Args:
        hf: HF(0), HF(1), ..., HF(D)
        dim: Krull dimension

    Returns:
        The h-polynomial
    """
    factor = IntPoly.binomial_power(dim, -1)
    D = len(hf) - 1
    product = [0] * (D + 1)
    for k in range(D + 1):
        s = 0
        for j in range(min(k, dim) + 1):
            s += factor[j] * hf[k - j]
        product[k] = s
    h = IntPoly(tuple(product))
    if h.degree > D - (dim + 1):
        raise SeriesNotRationalError(
            f"series not rational with this dimension (dim={dim}, {D + 1} terms, "
            f"residual up to degree {h.degree})"
        )
    return h
