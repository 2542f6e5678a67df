"""Ordered alphabets, byte words, lexicographic comparison and borders.

Words are ``bytes``. An :class:`OrderedAlphabet` fixes a total order on a
set of byte values; every comparison first translates the words into rank
space, after which plain byte comparison realizes the alphabet order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

Span = tuple[int, int]


class AlphabetError(ValueError):
    """A word contains a symbol the active alphabet does not rank."""


class EmptyWordError(ValueError):
    """An operation defined on nonempty words received the empty word."""


@dataclass(frozen=True)
class OrderedAlphabet:
    """A total order on byte symbols, listed smallest first."""

    symbols: bytes

    def __post_init__(self) -> None:
        if isinstance(self.symbols, str):
            object.__setattr__(self, "symbols", self.symbols.encode("latin-1"))
        if not self.symbols:
            raise AlphabetError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"alphabet symbols are not distinct: {self.symbols!r}")

    @classmethod
    def natural(cls) -> OrderedAlphabet:
        return NATURAL

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: int) -> bool:
        return symbol in self.rank

    @cached_property
    def rank(self) -> dict[int, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    @cached_property
    def _table(self) -> bytes:
        table = bytearray(256)
        for i, s in enumerate(self.symbols):
            table[s] = i
        return bytes(table)

    def inverse(self) -> OrderedAlphabet:
        """The same symbols with the order reversed."""
        return OrderedAlphabet(self.symbols[::-1])

    def less(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]

    def check(self, w: bytes) -> None:
        stray = w.translate(None, self.symbols)
        if stray:
            raise AlphabetError(
                f"symbol {bytes([stray[0]])!r} is not in the alphabet"
            )

    def encode(self, w: bytes) -> bytes:
        """Map ``w`` into rank space, where byte order equals alphabet order."""
        self.check(w)
        return w.translate(self._table)


NATURAL = OrderedAlphabet(bytes(range(256)))


def inverse_order(alphabet: OrderedAlphabet) -> OrderedAlphabet:
    return alphabet.inverse()


def require_nonempty(w: bytes) -> None:
    if not w:
        raise EmptyWordError("operation requires a nonempty word")


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Cmp(NamedTuple):
    """Outcome of a lexicographic comparison.

    ``non_prefix`` is true when the outcome is LESS and it is witnessed by a
    symbol mismatch rather than by ``x`` being a proper prefix of ``y``.
    """

    order: Order
    non_prefix: bool = False


def _cmp_encoded(x: bytes, y: bytes) -> Cmp:
    n = min(len(x), len(y))
    hx, hy = x[:n], y[:n]
    if hx == hy:
        if len(x) == len(y):
            return Cmp(Order.EQUAL)
        return Cmp(Order.LESS) if len(x) < len(y) else Cmp(Order.GREATER)
    # equal-length heads differ, so byte order sees the first mismatch
    return Cmp(Order.LESS, True) if hx < hy else Cmp(Order.GREATER)


def cmp_lex(x: bytes, y: bytes, alphabet: OrderedAlphabet = NATURAL) -> Cmp:
    """Compare ``x`` and ``y`` in the lexicographic order induced by ``alphabet``."""
    return _cmp_encoded(alphabet.encode(x), alphabet.encode(y))


def ll_encoded(x: bytes, y: bytes) -> bool:
    n = min(len(x), len(y))
    return x[:n] < y[:n]


def ll(x: bytes, y: bytes, alphabet: OrderedAlphabet = NATURAL) -> bool:
    """True iff ``x`` precedes ``y`` and is not a proper prefix of it."""
    return ll_encoded(alphabet.encode(x), alphabet.encode(y))


def is_prefix(x: bytes, y: bytes) -> bool:
    return y.startswith(x)


def is_proper_prefix(x: bytes, y: bytes) -> bool:
    return len(x) < len(y) and y.startswith(x)


def border_array(w: Sequence[int]) -> list[int]:
    """Failure function: ``f[i]`` is the length of the border of ``w[:i+1]``."""
    f = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        c = w[i]
        while k and w[k] != c:
            k = f[k - 1]
        if w[k] == c:
            k += 1
        f[i] = k
    return f


def _border_lengths(w: bytes) -> list[int]:
    f = border_array(w)
    out = []
    k = f[-1] if f else 0
    while k:
        out.append(k)
        k = f[k - 1]
    out.reverse()
    return out


def all_borders(w: bytes) -> list[bytes]:
    """Every nonempty border of ``w``, shortest first."""
    require_nonempty(w)
    return [w[:k] for k in _border_lengths(w)]


def shortest_border(w: bytes) -> bytes | None:
    """The shortest nonempty border of ``w``, or None if ``w`` is unbordered."""
    require_nonempty(w)
    f = border_array(w)
    k = f[-1]
    if not k:
        return None
    while f[k - 1]:
        k = f[k - 1]
    return w[:k]


@dataclass(frozen=True)
class Factorization:
    """A word together with contiguous half-open spans covering it."""

    word: bytes
    spans: tuple[Span, ...]

    def __post_init__(self) -> None:
        spans = tuple((int(s), int(e)) for s, e in self.spans)
        object.__setattr__(self, "spans", spans)
        if not self.word:
            raise EmptyWordError("a factorization covers a nonempty word")
        pos = 0
        for s, e in spans:
            if s != pos or e <= s:
                raise ValueError(f"spans are not contiguous and nonempty: {spans}")
            pos = e
        if pos != len(self.word):
            raise ValueError(f"spans end at {pos}, word has length {len(self.word)}")

    @classmethod
    def from_factors(cls, factors: Sequence[bytes]) -> Factorization:
        spans = []
        pos = 0
        for f in factors:
            spans.append((pos, pos + len(f)))
            pos += len(f)
        return cls(b"".join(factors), tuple(spans))

    @classmethod
    def from_cuts(cls, word: bytes, cuts: Sequence[int]) -> Factorization:
        """Build from interior cut positions (sorted, exclusive of 0 and len)."""
        bounds = [0, *cuts, len(word)]
        return cls(word, tuple(zip(bounds, bounds[1:])))

    @property
    def factors(self) -> list[bytes]:
        return [self.word[s:e] for s, e in self.spans]

    def __len__(self) -> int:
        return len(self.spans)

    def __iter__(self) -> Iterator[bytes]:
        return iter(self.factors)

    def __str__(self) -> str:
        return "|".join(f.decode("latin-1") for f in self.factors)
