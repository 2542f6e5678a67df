"""Brute-force reference implementations and exhaustive enumerators.

Everything here works straight from the definitions (rotations, all
suffixes, all compositions) and deliberately avoids the linear-time code in
:mod:`lynkit.core`, :mod:`lynkit.lyndon` and :mod:`lynkit.icfl`, except in
:func:`check_word`, which compares the two sides.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import icfl
from .core import NATURAL, Factorization, OrderedAlphabet

DEFAULT_BOUND = 16

Key = tuple[int, ...]


class EnumerationBoundError(ValueError):
    """Refusal to enumerate beyond the configured length bound."""


class TheoremViolation(AssertionError):
    """A brute-force search contradicted a result the library relies on."""


def _guard(w: bytes, bound: int) -> None:
    if len(w) > bound:
        raise EnumerationBoundError(
            f"word length {len(w)} exceeds enumeration bound {bound}"
        )


def _key(w: bytes, alphabet: OrderedAlphabet) -> Key:
    rank = alphabet.rank
    try:
        return tuple(rank[c] for c in w)
    except KeyError as exc:
        raise ValueError(f"symbol {exc.args[0]!r} is not in the alphabet") from None


def brute_less(x: Key, y: Key) -> bool:
    """x < y: proper prefix, or first mismatch favours x."""
    for i in range(min(len(x), len(y))):
        if x[i] != y[i]:
            return x[i] < y[i]
    return len(x) < len(y)


def brute_ll(x: Key, y: Key) -> bool:
    for i in range(min(len(x), len(y))):
        if x[i] != y[i]:
            return x[i] < y[i]
    return False


def brute_borders(w: bytes) -> list[bytes]:
    """All nonempty borders, shortest first, by direct prefix/suffix tests."""
    return [w[:i] for i in range(1, len(w)) if w[:i] == w[len(w) - i:]]


def _is_lyndon_key(k: Key) -> bool:
    n = len(k)
    rotations = [k[i:] + k[:i] for i in range(1, n)]
    # primitive and strictly smallest in its conjugacy class
    return all(brute_less(k, r) for r in rotations)


def _is_il_key(k: Key) -> bool:
    return all(brute_less(k[i:], k) for i in range(1, len(k)))


def brute_is_lyndon(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> bool:
    _guard(w, bound)
    if not w:
        raise ValueError("empty word")
    return _is_lyndon_key(_key(w, alphabet))


def brute_is_inverse_lyndon(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> bool:
    _guard(w, bound)
    if not w:
        raise ValueError("empty word")
    return _is_il_key(_key(w, alphabet))


def brute_is_anti_lyndon(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> bool:
    return brute_is_lyndon(w, OrderedAlphabet(alphabet.symbols[::-1]), bound)


def brute_longest_il_suffix(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> bytes:
    k = _key(w, alphabet)
    _guard(w, bound)
    for i in range(len(w)):
        if _is_il_key(k[i:]):
            return w[i:]
    raise TheoremViolation("a single symbol is always an inverse Lyndon word")


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Interior cut sets of a length-n word, ordered by span-length vector."""
    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield ()
            return
        for end in range(pos + 1, n + 1):
            for rest in rec(end):
                yield ((end,) if end < n else ()) + rest
    return rec(0)


def brute_cfl(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> Factorization:
    """The unique nonincreasing product of Lyndon words equal to ``w``.

    Compositions are walked depth first, abandoning a branch as soon as a
    factor fails to be Lyndon or exceeds its predecessor. Zero or several
    hits raise TheoremViolation.
    """
    _guard(w, bound)
    if not w:
        raise ValueError("empty word")
    k = _key(w, alphabet)
    n = len(w)
    found: list[Factorization] = []

    def rec(pos: int, prev: Key | None, cuts: list[int]) -> None:
        if pos == n:
            found.append(Factorization.from_cuts(w, cuts[:-1]))
            return
        for end in range(pos + 1, n + 1):
            part = k[pos:end]
            if prev is not None and brute_less(prev, part):
                continue
            if not _is_lyndon_key(part):
                continue
            cuts.append(end)
            rec(end, part, cuts)
            cuts.pop()

    rec(0, None, [])
    if len(found) != 1:
        raise TheoremViolation(f"{w!r} has {len(found)} nonincreasing Lyndon factorizations")
    return found[0]


def _il_table(k: Key) -> dict[tuple[int, int], bool]:
    n = len(k)
    return {(s, e): _is_il_key(k[s:e]) for s in range(n) for e in range(s + 1, n + 1)}


def enumerate_ilfs(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> list[Factorization]:
    """Every inverse Lyndon factorization of ``w``.

    Output is ordered lexicographically by the vector of span lengths.
    """
    _guard(w, bound)
    if not w:
        raise ValueError("empty word")
    k = _key(w, alphabet)
    n = len(w)
    il = _il_table(k)
    out: list[Factorization] = []

    def rec(pos: int, prev: tuple[int, int] | None, cuts: list[int]) -> None:
        if pos == n:
            out.append(Factorization.from_cuts(w, cuts[:-1]))
            return
        for end in range(pos + 1, n + 1):
            if not il[pos, end]:
                continue
            if prev is not None and not brute_ll(k[prev[0]:prev[1]], k[pos:end]):
                continue
            cuts.append(end)
            rec(end, (pos, end), cuts)
            cuts.pop()

    rec(0, None, [])
    return out


def brute_has_border_property(f: Factorization) -> bool:
    """Checks every border of every factor, not just the shortest."""
    factors = f.factors
    for cur, nxt in zip(factors, factors[1:]):
        if any(nxt[: len(b)] == b for b in brute_borders(cur)):
            return False
    return True


def brute_cfl_in_chains(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> list[list[tuple[int, int]]]:
    """CFL_in factor spans grouped into maximal prefix chains."""
    inv = OrderedAlphabet(alphabet.symbols[::-1])
    spans = list(brute_cfl(w, inv, bound).spans)
    chains = [[spans[0]]]
    for s, e in spans[1:]:
        ps, pe = chains[-1][-1]
        prev, cur = w[ps:pe], w[s:e]
        if prev[: len(cur)] == cur:
            chains[-1].append((s, e))
        else:
            chains.append([(s, e)])
    return chains


def brute_is_ilf(f: Factorization, alphabet: OrderedAlphabet = NATURAL) -> bool:
    keys = [_key(m, alphabet) for m in f.factors]
    return all(_is_il_key(k) for k in keys) and all(
        brute_ll(x, y) for x, y in zip(keys, keys[1:])
    )


def brute_is_grouping(
    f: Factorization,
    alphabet: OrderedAlphabet = NATURAL,
    chains=None,
    bound: int = DEFAULT_BOUND,
) -> bool:
    if not brute_is_ilf(f, alphabet):
        return False
    if chains is None:
        chains = brute_cfl_in_chains(f.word, alphabet, bound)
    # each factor must equal the concatenation of a contiguous slice of one chain
    for s, e in f.spans:
        ok = False
        for chain in chains:
            starts = [a for a, _ in chain]
            ends = [b for _, b in chain]
            if s in starts and e in ends and starts.index(s) <= ends.index(e):
                ok = True
        if not ok:
            return False
    return True


def brute_is_compact(
    f: Factorization,
    alphabet: OrderedAlphabet = NATURAL,
    chains=None,
    bound: int = DEFAULT_BOUND,
) -> bool:
    if not brute_is_ilf(f, alphabet):
        return False
    w = f.word
    if chains is None:
        chains = brute_cfl_in_chains(w, alphabet, bound)
    starts = set()
    for chain in chains:
        prev = None
        for s, e in chain:
            if w[s:e] != prev:
                starts.add(s)
            prev = w[s:e]
    return all(s in starts for s, _ in f.spans)


def brute_canonical_pair(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> tuple[bytes, bytes, bytes]:
    """(p, p_bar, r) by trying every split of the shortest non-inverse-Lyndon prefix."""
    _guard(w, bound)
    k = _key(w, alphabet)
    for n in range(1, len(w) + 1):
        if not _is_il_key(k[:n]):
            break
    else:
        raise ValueError(f"{w!r} is an inverse Lyndon word")
    z = w[:n]
    # z = r a s r b with |p| = |r a s| = n - |r| - 1
    for rl in range(n):
        pl = n - rl - 1
        if pl < rl + 1:
            break
        if z[pl:pl + rl] == z[:rl] and k[rl] < k[n - 1] and _is_il_key(k[pl:n]):
            return z[:pl], z[pl:], z[:rl]
    raise TheoremViolation(f"no canonical pair for {w!r}")


def brute_sesquipower_of_lyndon(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> bool:
    """w = l^k p with l Lyndon, k >= 1 and p a proper prefix of l."""
    k = _key(w, alphabet)
    for i in range(1, len(w) + 1):
        if _is_lyndon_key(k[:i]) and all(k[j] == k[j - i] for j in range(i, len(k))):
            return True
    return False


def words(alphabet: OrderedAlphabet, maxlen: int, minlen: int = 1) -> Iterator[bytes]:
    """All words over the alphabet by length, then in alphabet order."""
    for n in range(minlen, maxlen + 1):
        for t in itertools.product(alphabet.symbols, repeat=n):
            yield bytes(t)


@dataclass
class EnumerationReport:
    word: bytes
    all_ilfs: list[Factorization]
    border_ilfs: list[Factorization]
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if not v]

    def to_record(self) -> dict:
        return {
            "word": self.word.decode("latin-1"),
            "ilfs": [[list(s) for s in f.spans] for f in self.all_ilfs],
            "border_ilfs": [[list(s) for s in f.spans] for f in self.border_ilfs],
            "verdicts": self.verdicts,
            "passed": self.passed,
        }


CLAIMS = (
    "unique_border_ilf",
    "border_check_agrees",
    "border_ilfs_compact",
    "icfl_linear",
    "icfl_recursive",
    "grouping",
    "compact",
    "last_factor",
)


def check_word(
    w: bytes, alphabet: OrderedAlphabet = NATURAL, bound: int = DEFAULT_BOUND
) -> EnumerationReport:
    """Certify every ICFL claim on one word against brute force."""
    ilfs = enumerate_ilfs(w, alphabet, bound)
    chains = brute_cfl_in_chains(w, alphabet, bound)
    border = [f for f in ilfs if brute_has_border_property(f)]
    v: dict[str, bool] = {}
    v["unique_border_ilf"] = len(border) == 1
    v["border_check_agrees"] = all(
        icfl.has_border_property(f) == (f in border) for f in ilfs
    )
    v["border_ilfs_compact"] = all(brute_is_compact(f, alphabet, chains) for f in border)
    target = border[0] if border else None
    try:
        lin = icfl.icfl_linear(w, alphabet)
    except Exception:
        lin = None
    try:
        rec = icfl.icfl_recursive(w, alphabet)
    except Exception:
        rec = None
    v["icfl_linear"] = target is not None and lin == target
    v["icfl_recursive"] = target is not None and rec == target
    v["grouping"] = lin is not None and brute_is_grouping(lin, alphabet, chains)
    v["compact"] = lin is not None and brute_is_compact(lin, alphabet, chains)
    v["last_factor"] = lin is not None and (
        lin.factors[-1] == brute_longest_il_suffix(w, alphabet, bound)
    )
    return EnumerationReport(w, ilfs, border, v)


def _check_chunk(args: tuple[Sequence[bytes], bytes, int]) -> list[EnumerationReport]:
    batch, symbols, bound = args
    alphabet = OrderedAlphabet(symbols)
    return [check_word(w, alphabet, bound) for w in batch]


def verify_claims(
    maxlen: int,
    alphabet: OrderedAlphabet,
    bound: int = DEFAULT_BOUND,
    workers: int = 1,
    chunk: int = 512,
) -> list[EnumerationReport]:
    """Check every word of length 1..maxlen; failures are recorded, not raised.

    Reports come back in canonical word order regardless of ``workers``.
    """
    if maxlen > bound:
        raise EnumerationBoundError(f"maxlen {maxlen} exceeds enumeration bound {bound}")
    universe = list(words(alphabet, maxlen))
    if workers <= 1:
        return [check_word(w, alphabet, bound) for w in universe]
    batches = [universe[i:i + chunk] for i in range(0, len(universe), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_check_chunk, [(b, alphabet.symbols, bound) for b in batches])
        return [r for part in parts for r in part]
