"""Exact Laurent polynomials in the square root of t.

Exponents are stored as *twice* the true exponent (an integer k stands for
t^(k/2)), so half-integer powers stay exact.  Coefficients are Python ints,
hence arbitrary precision.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, List, Tuple


class HalfPoly:
    """An integer Laurent polynomial in t^(1/2).

    Instances are immutable.  The internal mapping sends twice-exponents to
    nonzero integer coefficients; zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Dict[int, int] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if v != 0:
                    c[int(k)] = int(v)
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "HalfPoly":
        return HalfPoly()

    @staticmethod
    def one() -> "HalfPoly":
        return HalfPoly({0: 1})

    @staticmethod
    def monomial(twice_exp: int, coeff: int = 1) -> "HalfPoly":
        """coeff * t^(twice_exp / 2)."""
        return HalfPoly({twice_exp: coeff})

    @staticmethod
    def from_int_coeffs(coeffs: Iterable[int], low: int = 0) -> "HalfPoly":
        """Polynomial with integer exponents low, low+1, ... and the given
        coefficients."""
        return HalfPoly({2 * (low + i): c for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> List[Tuple[int, int]]:
        """(twice_exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def coeff(self, twice_exp: int) -> int:
        return self._c.get(twice_exp, 0)

    def min_twice_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_twice_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HalfPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"HalfPoly({render(self)!r})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "HalfPoly") -> "HalfPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return HalfPoly(c)

    def __neg__(self) -> "HalfPoly":
        return HalfPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "HalfPoly") -> "HalfPoly":
        return self + (-other)

    def __mul__(self, other: "HalfPoly") -> "HalfPoly":
        c: Dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return HalfPoly(c)

    def shift(self, twice_exp: int) -> "HalfPoly":
        """Multiply by t^(twice_exp / 2)."""
        return HalfPoly({k + twice_exp: v for k, v in self._c.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    # -- canonical form under equality-up-to-a-power-of-t --------------

    def canonicalize(self) -> "HalfPoly":
        """Shift so the minimal twice-exponent is 0.

        Two polynomials are equal up to a power of t^(1/2) iff their
        canonical forms are identical.
        """
        if not self._c:
            raise ValueError("canonical form of the zero polynomial is undefined")
        return self.shift(-self.min_twice_exp())

    def doteq(self, other: "HalfPoly") -> bool:
        """Equality up to multiplication by a power of t^(1/2)."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.canonicalize() == other.canonicalize()

    # -- dense coefficient sequence ------------------------------------

    def coeff_seq(self) -> List[int]:
        """Dense coefficients from minimal to maximal degree.

        Requires all exponents to share parity (integral spacing); raises
        ValueError on mixed half-integer/integer exponents.
        """
        if not self._c:
            raise ValueError("zero polynomial has no coefficient sequence")
        ks = sorted(self._c)
        parity = ks[0] % 2
        if any(k % 2 != parity for k in ks):
            raise ValueError("mixed exponent parity; no dense sequence")
        return [self._c.get(k, 0) for k in range(ks[0], ks[-1] + 1, 2)]


def quantum_integer(i: int) -> HalfPoly:
    """[i] = t^((i-1)/2) + t^((i-3)/2) + ... + t^((1-i)/2)."""
    if i < 1:
        raise ValueError(f"quantum integer needs i >= 1, got {i}")
    return HalfPoly({k: 1 for k in range(1 - i, i, 2)})


def box(lo: int, hi: int) -> HalfPoly:
    """t^lo + t^(lo+1) + ... + t^hi (integer exponents), for lo <= hi."""
    if lo > hi:
        raise ValueError("empty box polynomial")
    return HalfPoly({2 * j: 1 for j in range(lo, hi + 1)})


# -- coefficient sequence predicates -----------------------------------


def is_unimodal(seq: List[int]) -> bool:
    """True iff the sequence rises (weakly) then falls (weakly)."""
    n = len(seq)
    i = 0
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i == n - 1


def is_trapezoidal(seq: List[int]) -> bool:
    """Symmetric, unimodal, and any plateau in the rising half reaches the
    middle."""
    n = len(seq)
    if n == 0:
        return False
    if any(seq[i] != seq[n - 1 - i] for i in range(n)):
        return False
    if not is_unimodal(seq):
        return False
    m = n // 2
    mid = (n - 1) // 2  # 0-based index of the middle element
    # a plateau a_j = a_{j+1} in the rising half must run to the middle
    for j in range(m):
        if seq[j] == seq[j + 1]:
            if any(seq[x] != seq[j] for x in range(j, mid + 1)):
                return False
    return True


def strict_positive(seq: List[int]) -> bool:
    """True iff every entry between the first and last nonzero is > 0."""
    nz = [i for i, a in enumerate(seq) if a != 0]
    if not nz:
        return False
    return all(seq[i] > 0 for i in range(nz[0], nz[-1] + 1))


# -- text rendering and parsing -----------------------------------------


def _render_exp(k: int) -> str:
    """Exponent part for twice-exponent k (k != 0)."""
    if k == 2:
        return "t"
    if k % 2 == 0:
        return f"t^{k // 2}"
    return f"t^({k}/2)"


def render(p: HalfPoly) -> str:
    """Human-readable form, terms in ascending exponent order."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in p.terms():
        if k == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = _render_exp(k)
        else:
            body = f"{abs(c)}*{_render_exp(k)}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+)\*?)?"
    r"(?:t(?:\^(?:(?P<int>-?\d+)|\((?P<num>-?\d+)/2\)))?)?$"
)


def parse(text: str) -> HalfPoly:
    """Parse the grammar produced by render()."""
    text = text.strip()
    if text == "0":
        return HalfPoly.zero()
    # normalize to signed term list
    text = text.replace("- ", "+ -").replace("+ ", "+")
    chunks = [c.strip() for c in text.split("+") if c.strip()]
    coeffs: Dict[int, int] = {}
    for chunk in chunks:
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        coeff = int(m.group("coeff") or 1)
        if "t" not in chunk:
            k = 0
        elif m.group("num") is not None:
            k = int(m.group("num"))
        elif m.group("int") is not None:
            k = 2 * int(m.group("int"))
        else:
            k = 2
        coeffs[k] = coeffs.get(k, 0) + sign * coeff
    return HalfPoly(coeffs)
