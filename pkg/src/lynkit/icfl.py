"""The canonical inverse Lyndon factorization (ICFL) and its checkers.

Two independent constructions are provided:

* :func:`icfl_linear` scans the compact factors of CFL_in right to left,
  closing the current suffix as a factor whenever the next root to its left
  is ``<<`` it. Factors are index pairs into the word.
* :func:`icfl_recursive` follows the recursive definition through
  canonical pairs; it is slower and exists as a differential twin.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    NATURAL,
    Factorization,
    OrderedAlphabet,
    border_array,
    is_prefix,
    ll_encoded,
    require_nonempty,
    shortest_border,
)
from .lyndon import (
    CompactRun,
    chain_decompose,
    compact_factors,
    is_inverse_lyndon,
    prenecklace_scan,
)


class PreconditionError(ValueError):
    """The input word does not satisfy the operation's precondition."""


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CanonicalPair:
    """``p = r a s`` and ``p_bar = r b`` with ``a < b``; ``p p_bar`` prefixes the word."""

    p: bytes
    p_bar: bytes
    r: bytes
    a: int
    b: int
    prefix_len: int

    @property
    def s(self) -> bytes:
        return self.p[len(self.r) + 1:]

    @property
    def z(self) -> bytes:
        return self.p + self.p_bar


def icfl_linear(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, runs: list[CompactRun] | None = None
) -> Factorization:
    """ICFL of ``w``; ``runs`` may carry precomputed compact factors of ``w``."""
    require_nonempty(w)
    if runs is None:
        runs = compact_factors(w, alphabet)
    enc = alphabet.encode(w)
    n = len(w)
    cuts: list[int] = []
    # current suffix m' is enc[m_start:m_end]
    m_end = n
    m_start = runs[-1].start
    for run in reversed(runs[:-1]):
        size = len(run.root)
        k = min(size, m_end - m_start)
        if ll_encoded(enc[run.start:run.start + k], enc[m_start:m_start + k]):
            cuts.append(m_start)
            m_end = m_start
        m_start = run.start
    cuts.reverse()
    return Factorization.from_cuts(w, cuts)


def _first_non_il_prefix(enc_in: bytes) -> int:
    """Length of the shortest prefix that is not an inverse Lyndon word, or 0."""
    fail, _ = prenecklace_scan(enc_in)
    return fail + 1 if fail >= 0 else 0


def _pair_from_prefix(z: bytes, alphabet: OrderedAlphabet) -> CanonicalPair:
    # r is a border of z[:-1] (possibly empty) followed by a symbol a < b
    b = z[-1]
    u = z[:-1]
    f = border_array(u)
    lengths = []
    k = f[-1]
    while k:
        lengths.append(k)
        k = f[k - 1]
    lengths.append(0)
    for i in reversed(lengths):
        if 2 * i + 1 <= len(u) and alphabet.less(z[i], b):
            p_len = len(z) - i - 1
            return CanonicalPair(
                p=z[:p_len], p_bar=z[p_len:], r=z[:i], a=z[i], b=b, prefix_len=len(z)
            )
    raise InvariantError(f"no canonical split for prefix {z!r}")


def canonical_pair(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> CanonicalPair:
    """Canonical pair of a word that is not an inverse Lyndon word."""
    require_nonempty(w)
    z_len = _first_non_il_prefix(alphabet.inverse().encode(w))
    if not z_len:
        raise PreconditionError(f"{w!r} is an inverse Lyndon word")
    return _pair_from_prefix(w[:z_len], alphabet)


def icfl_recursive(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> Factorization:
    require_nonempty(w)
    inv = alphabet.inverse()
    alphabet.check(w)
    # unroll w = p_1 p_2 ... p_j v, with v inverse Lyndon
    pairs: list[CanonicalPair] = []
    pos = 0
    while True:
        z_len = _first_non_il_prefix(inv.encode(w[pos:]))
        if not z_len:
            break
        pair = _pair_from_prefix(w[pos:pos + z_len], alphabet)
        pairs.append(pair)
        pos += len(pair.p)

    # built back to front: rev[-1] is the current first factor
    rev = [w[pos:]]
    for pair in reversed(pairs):
        head = rev[-1]
        if is_prefix(pair.p_bar, head):
            rev.append(pair.p)
        elif is_prefix(head, pair.r):
            rev[-1] = pair.p + head
        else:
            raise InvariantError(
                f"neither recursion case applies: p={pair.p!r}, first factor={head!r}"
            )
    rev.reverse()
    return Factorization.from_factors(rev)


def longest_il_suffix(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> bytes:
    s, e = icfl_linear(w, alphabet).spans[-1]
    return w[s:e]


def has_border_property(f: Factorization) -> bool:
    """No nonempty border of a factor is a prefix of the next factor.

    Borders nest, so it suffices to test the shortest one.
    """
    factors = f.factors
    for cur, nxt in zip(factors, factors[1:]):
        border = shortest_border(cur)
        if border is not None and nxt.startswith(border):
            return False
    return True


def is_inverse_lyndon_factorization(
    f: Factorization, alphabet: OrderedAlphabet = NATURAL
) -> bool:
    factors = f.factors
    if not all(is_inverse_lyndon(m, alphabet) for m in factors):
        return False
    enc = [alphabet.encode(m) for m in factors]
    return all(ll_encoded(x, y) for x, y in zip(enc, enc[1:]))


def is_grouping(f: Factorization, alphabet: OrderedAlphabet = NATURAL) -> bool:
    """An ILF whose factors each join consecutive CFL_in factors of one chain."""
    if not is_inverse_lyndon_factorization(f, alphabet):
        return False
    chains = chain_decompose(compact_factors(f.word, alphabet), alphabet)
    chain_of_start: dict[int, int] = {}
    factor_end: dict[int, int] = {}
    for ci, chain in enumerate(chains):
        for run in chain:
            for s, e in run.factor_spans():
                chain_of_start[s] = ci
                factor_end[s] = e
    for s, e in f.spans:
        if s not in chain_of_start:
            return False
        ci = chain_of_start[s]
        pos = s
        while pos < e:
            if chain_of_start.get(pos) != ci:
                return False
            pos = factor_end[pos]
        if pos != e:
            return False
    return True


def is_compact_factorization(f: Factorization, alphabet: OrderedAlphabet = NATURAL) -> bool:
    """An ILF whose factors are concatenations of whole compact factors."""
    if not is_inverse_lyndon_factorization(f, alphabet):
        return False
    starts = {run.start for run in compact_factors(f.word, alphabet)}
    return all(s in starts for s, _ in f.spans)
