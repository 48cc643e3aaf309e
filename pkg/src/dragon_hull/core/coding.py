"""Eventually periodic codings and structured point labels."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from ..errors import DomainError, InvalidSymbolError

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse '2211' or '2,2,1,1' into a symbol tuple."""

    text = text.strip()
    if not text:
        return ()
    parts = text.split(",") if "," in text else list(text)
    try:
        return tuple(int(part) for part in parts)
    except ValueError as exc:
        raise InvalidSymbolError(f"cannot parse coding word {text!r}") from exc


def validate_word(word: Iterable[int], alphabet_size: int = 2) -> Word:
    """Return the word as a tuple, checking every symbol is in 1..alphabet_size."""

    symbols = tuple(word)
    for symbol in symbols:
        if not isinstance(symbol, int) or not 1 <= symbol <= alphabet_size:
            raise InvalidSymbolError(
                f"symbol {symbol!r} outside alphabet 1..{alphabet_size}"
            )
    return symbols


@dataclass(frozen=True)
class Coding:
    """Infinite word prefix · (period)^inf."""

    prefix: Word
    period: Word

    def __post_init__(self) -> None:
        if len(self.period) < 1:
            raise DomainError("coding period must be non-empty")
        object.__setattr__(self, 'prefix', tuple(self.prefix))
        object.__setattr__(self, 'period', tuple(self.period))
        for symbol in self.prefix + self.period:
            if not isinstance(symbol, int) or symbol < 1:
                raise InvalidSymbolError(f"symbol {symbol!r} is not a positive integer")

    @classmethod
    def from_strings(cls, prefix: str, period: str) -> Coding:
        return cls(prefix=parse_word(prefix), period=parse_word(period))

    def validate(self, alphabet_size: int) -> Coding:
        validate_word(self.prefix + self.period, alphabet_size)
        return self

    def __str__(self) -> str:
        head = "".join(str(s) for s in self.prefix)
        return f"{head}({''.join(str(s) for s in self.period)})^inf"


class PointFamily(Enum):
    """Closed-form point families; value order is the canonical sort order."""

    B = "b"
    Z = "z"
    W = "w"


_FAMILY_RANK = {PointFamily.B: 0, PointFamily.Z: 1, PointFamily.W: 2}


@dataclass(frozen=True)
class PointLabel:
    """Structured tag such as z_3, rendered as 'z3'."""

    family: PointFamily
    index: int

    def __str__(self) -> str:
        return f"{self.family.value}{self.index}"

    def sort_key(self) -> tuple[int, int]:
        return (_FAMILY_RANK[self.family], self.index)

    def __lt__(self, other: PointLabel) -> bool:
        return self.sort_key() < other.sort_key()

    @classmethod
    def parse(cls, text: str) -> PointLabel:
        family = PointFamily(text[0])
        return cls(family=family, index=int(text[1:]))


@dataclass(frozen=True)
class LabeledPoint:
    """A candidate point together with its symbolic label."""

    label: PointLabel
    value: complex


DRAGON_PERIOD: Word = (2, 2, 1, 1)


def vertex_coding(label: PointLabel) -> Coding:
    """
    Eventually periodic coding of a candidate vertex.

    z_k = f_1^k(z_0), w_k = f_2(z_k) and b_k = f_2(w_{k+1}), while z_0 is the
    fixed point of f_2211; so b_0 has prefix 221.
    """
    if label.family is PointFamily.Z:
        prefix: Word = (1,) * label.index
    elif label.family is PointFamily.W:
        prefix = (2,) + (1,) * label.index
    else:
        prefix = (2, 2) + (1,) * (label.index + 1)
    return Coding(prefix=prefix, period=DRAGON_PERIOD)
