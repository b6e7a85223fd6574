"""Exact integer quaternion arithmetic and the 16-letter symbol alphabet.

Quaternions here always carry integer components, so every product, norm
and dot value in the rest of the package is exact.  Symbols are the
quaternions whose components are all 0 or 1; they double as a 4-bit mask
(bit 0 = scalar, bit 1 = i, bit 2 = j, bit 3 = k).
"""

from __future__ import annotations

import operator
import re

__all__ = [
    "Quaternion",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "SYMBOLS",
    "symbol_from_mask",
    "mask_from_symbol",
    "is_symbol",
    "symbol_to_text",
    "parse_symbol",
]


class Quaternion:
    """Integer quaternion a + bi + cj + dk with i^2 = j^2 = k^2 = ijk = -1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = operator.index(a)
        self.b = operator.index(b)
        self.c = operator.index(c)
        self.d = operator.index(d)

    def components(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a - other.a, self.b - other.b,
                          self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, int):
            return Quaternion(self.a * other, self.b * other,
                              self.c * other, self.d * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        # Bilinear expansion over the basis table (ij = k, ji = -k, ...).
        return Quaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return Quaternion(other * self.a, other * self.b,
                              other * self.c, other * self.d)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        """Scalar part kept, vector part negated: a - bi - cj - dk."""
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm_sq(self) -> int:
        """a^2 + b^2 + c^2 + d^2, the squared absolute value."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def dot(self, other: "Quaternion") -> int:
        """Component-wise dot product; equals the scalar part of conjugate(self) * other."""
        return (self.a * other.a + self.b * other.b
                + self.c * other.c + self.d * other.d)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    def __bool__(self):
        return (self.a, self.b, self.c, self.d) != (0, 0, 0, 0)

    def __str__(self):
        terms = []
        if self.a:
            terms.append(str(self.a))
        for coeff, unit in ((self.b, "i"), (self.c, "j"), (self.d, "k")):
            if not coeff:
                continue
            sign = "-" if coeff < 0 else ("+" if terms else "")
            mag = abs(coeff)
            terms.append(f"{sign}{'' if mag == 1 else mag}{unit}")
        return "".join(terms) if terms else "0"

    def __repr__(self):
        return f"Quaternion({self.a}, {self.b}, {self.c}, {self.d})"

    _TERM_RE = re.compile(r"([+-]?)(\d*)([ijk]?)")

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        """Parse the text form produced by str(), e.g. "-1-i+j-k" or "3"."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty quaternion text")
        parts = {"": 0, "i": 0, "j": 0, "k": 0}
        pos = 0
        while pos < len(s):
            m = cls._TERM_RE.match(s, pos)
            if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"bad quaternion text {text!r} at position {pos}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            parts[m.group(3)] += sign * mag
            pos = m.end()
        return cls(parts[""], parts["i"], parts["j"], parts["k"])


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)

#: The 16 symbols indexed by mask (bit 0 -> scalar, bit 1 -> i, bit 2 -> j, bit 3 -> k).
SYMBOLS: tuple[Quaternion, ...] = tuple(
    Quaternion(m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1) for m in range(16)
)


def symbol_from_mask(mask: int) -> Quaternion:
    """Symbol for a 4-bit mask in [0, 15]."""
    if not 0 <= mask <= 15:
        raise ValueError(f"symbol mask must be in [0, 15], got {mask}")
    return SYMBOLS[mask]


def is_symbol(q: Quaternion) -> bool:
    return all(component in (0, 1) for component in q.components())


def mask_from_symbol(q: Quaternion) -> int:
    """Inverse of symbol_from_mask; rejects quaternions with components outside {0, 1}."""
    if not is_symbol(q):
        raise ValueError(f"not a symbol (components must be 0 or 1): {q!r}")
    return q.a | (q.b << 1) | (q.c << 2) | (q.d << 3)


def symbol_to_text(q: Quaternion) -> str:
    """Canonical spelling of a symbol, e.g. "0", "i+j", "1+i+k"."""
    mask_from_symbol(q)
    return str(q)


_SYMBOL_BY_TEXT = {symbol_to_text(s): s for s in SYMBOLS}


def parse_symbol(text: str) -> Quaternion:
    """Parse one of the 16 canonical symbol spellings."""
    try:
        return _SYMBOL_BY_TEXT[text]
    except KeyError:
        raise ValueError(f"unrecognized symbol {text!r}") from None
