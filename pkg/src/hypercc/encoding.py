"""Unary, quaternary, and quaternion codeword schemes for integer coordinates.

A ladder scheme encodes the integers 1..C as fixed-length runs along an
ordered symbol ladder: value v (with u = v - 1, t = u // l, rmd = u % l)
becomes (l - rmd) copies of ladder[t] followed by rmd copies of
ladder[t + 1].  Consecutive values therefore differ in exactly one symbol
position, by one ladder step.  The unary scheme is the classic ones-prefix
thermometer code of length C.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .quaternion import ONE, Quaternion, parse_symbol, symbol_to_text

__all__ = [
    "Scheme",
    "UNARY",
    "QUATERNARY",
    "QUATERNION",
    "SCHEMES",
    "get_scheme",
    "DecodeError",
    "codeword_length",
    "encode_value",
    "encode_unary",
    "encode",
    "decode_value",
    "build_input",
    "codeword_to_text",
    "parse_codeword",
]


class DecodeError(ValueError):
    """Codeword is not a valid ladder run for the given scheme and range."""


@dataclass(frozen=True)
class Scheme:
    """An input alphabet: its name, channel dimension, and symbol ladder.

    arity is the number of nonzero ladder symbols; a codeword of length l
    can distinguish arity * l + 1 values.
    """

    name: str
    dim: int
    arity: int
    ladder: tuple[Quaternion, ...]
    _index: dict[Quaternion, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.ladder)})

    @property
    def alphabet(self) -> frozenset[Quaternion]:
        return frozenset(self.ladder)

    def ladder_index(self, symbol: Quaternion) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol} not in {self.name} alphabet") from None


_QUATERNION_LADDER_SPELLINGS = (
    "0", "1", "i", "j", "k",
    "1+i", "1+j", "1+k", "i+j", "j+k", "i+k",
    "1+i+j", "1+j+k", "1+i+k", "i+j+k", "1+i+j+k",
)

UNARY = Scheme("unary", 1, 1, (parse_symbol("0"), parse_symbol("1")))
QUATERNARY = Scheme("quaternary", 2, 3,
                    tuple(parse_symbol(s) for s in ("0", "1", "i", "1+i")))
QUATERNION = Scheme("quaternion", 4, 15,
                    tuple(parse_symbol(s) for s in _QUATERNION_LADDER_SPELLINGS))

SCHEMES = {s.name: s for s in (UNARY, QUATERNARY, QUATERNION)}


def get_scheme(name: str) -> Scheme:
    try:
        return SCHEMES[name]
    except KeyError:
        raise ValueError(f"unknown scheme {name!r} (choose from {sorted(SCHEMES)})") from None


def codeword_length(value_count: int, scheme: Scheme) -> int:
    """Codeword length needed for a range of value_count integers: ceil((C - 1) / arity)."""
    if scheme.name == "unary":
        raise ValueError("unary codewords have fixed length C; use encode_unary")
    if value_count < 2:
        raise ValueError(f"value count must be at least 2, got {value_count}")
    return -(-(value_count - 1) // scheme.arity)


def _check_value(value: int, value_count: int) -> None:
    if not 1 <= value <= value_count:
        raise ValueError(f"value {value} outside [1, {value_count}]")


def encode_value(value: int, value_count: int, scheme: Scheme) -> tuple[Quaternion, ...]:
    """Ladder codeword for value in 1..value_count.

    When value_count is below the full set size arity * l + 1, the first
    value_count codewords of the full set are used.
    """
    length = codeword_length(value_count, scheme)
    _check_value(value, value_count)
    u = value - 1
    t, rmd = divmod(u, length)
    if rmd == 0:
        return (scheme.ladder[t],) * length
    return (scheme.ladder[t],) * (length - rmd) + (scheme.ladder[t + 1],) * rmd


def encode_unary(value: int, value_count: int) -> tuple[Quaternion, ...]:
    """Thermometer codeword: value ones followed by value_count - value zeros."""
    if value_count < 1:
        raise ValueError(f"value count must be at least 1, got {value_count}")
    _check_value(value, value_count)
    one, zero = UNARY.ladder[1], UNARY.ladder[0]
    return (one,) * value + (zero,) * (value_count - value)


def encode(value: int, value_count: int, scheme: Scheme) -> tuple[Quaternion, ...]:
    """Dispatch to encode_unary or encode_value according to the scheme."""
    if scheme.name == "unary":
        return encode_unary(value, value_count)
    return encode_value(value, value_count, scheme)


def _decode_unary(codeword, value_count: int) -> int:
    if len(codeword) != value_count:
        raise DecodeError(f"unary codeword length {len(codeword)} != {value_count}")
    one, zero = UNARY.ladder[1], UNARY.ladder[0]
    # Count the ones prefix, then require a clean zero suffix.
    value = 0
    while value < len(codeword) and codeword[value] == one:
        value += 1
    for symbol in codeword[value:]:
        if symbol != zero:
            raise DecodeError(f"not a ones-prefix codeword: {','.join(map(str, codeword))}")
    if value < 1:
        raise DecodeError("unary codeword decodes to 0, outside the valid range")
    return value


def decode_value(codeword, value_count: int, scheme: Scheme) -> int:
    """Exact inverse of encode/encode_unary for the same scheme and range."""
    codeword = tuple(codeword)
    if scheme.name == "unary":
        return _decode_unary(codeword, value_count)
    length = codeword_length(value_count, scheme)
    if len(codeword) != length:
        raise DecodeError(f"codeword length {len(codeword)} != {length}")
    try:
        t = scheme.ladder_index(codeword[0])
    except ValueError as exc:
        raise DecodeError(str(exc)) from None
    prefix = 0
    while prefix < length and codeword[prefix] == codeword[0]:
        prefix += 1
    rmd = length - prefix
    if rmd:
        if t + 1 >= len(scheme.ladder):
            raise DecodeError(f"no ladder step above {codeword[0]}: {','.join(map(str, codeword))}")
        succ = scheme.ladder[t + 1]
        for position in range(prefix, length):
            if codeword[position] != succ:
                raise DecodeError(f"not a ladder run at position {position}: {','.join(map(str, codeword))}")
    value = t * length + rmd + 1
    if value > value_count:
        raise DecodeError(f"codeword decodes to {value}, outside [1, {value_count}]")
    return value


def build_input(row: int, col: int, value_count: int, scheme: Scheme) -> tuple[Quaternion, ...]:
    """Network input vector: row codeword, column codeword, then the bias symbol 1."""
    return encode(row, value_count, scheme) + encode(col, value_count, scheme) + (ONE,)


def codeword_to_text(codeword) -> str:
    return ",".join(symbol_to_text(s) for s in codeword)


def parse_codeword(text: str) -> tuple[Quaternion, ...]:
    return tuple(parse_symbol(part) for part in text.split(","))
