"""Lyndon and inverse Lyndon predicates, Duval factorization and chains.

``cfl_in`` is Duval's factorization under the reversed order. Its runs of
equal factors are exactly the compact factors, since equal factors of a
nonincreasing sequence sit next to each other and are prefix-comparable,
so a run never straddles two maximal prefix chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NATURAL, OrderedAlphabet, Span, require_nonempty

ChainDecomposition = list[list["CompactRun"]]


class ContractError(ValueError):
    """Input violates an operation's documented precondition."""


@dataclass(frozen=True)
class CompactRun:
    """``root ** exponent`` occurring at ``start`` in the factorized word."""

    root: bytes
    exponent: int
    start: int

    @property
    def length(self) -> int:
        return len(self.root) * self.exponent

    @property
    def end(self) -> int:
        return self.start + self.length

    @property
    def span(self) -> Span:
        return (self.start, self.end)

    @property
    def text(self) -> bytes:
        return self.root * self.exponent

    def factor_spans(self) -> list[Span]:
        n = len(self.root)
        return [(self.start + i * n, self.start + (i + 1) * n) for i in range(self.exponent)]


def duval(s: bytes) -> list[tuple[int, int, int]]:
    """Lyndon runs of ``s`` under plain byte order as (start, period, exponent)."""
    n = len(s)
    runs: list[tuple[int, int, int]] = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n:
            ck = s[k]
            cj = s[j]
            if ck < cj:
                k = i
            elif ck == cj:
                k += 1
            else:
                break
            j += 1
        p = j - k
        e = (k - i) // p + 1
        if runs:
            ps, pp, pe = runs[-1]
            if pp == p and s[ps:ps + p] == s[i:i + p]:
                runs[-1] = (ps, p, pe + e)
                i += e * p
                continue
        runs.append((i, p, e))
        i += e * p
    return runs


def prenecklace_scan(s: bytes) -> tuple[int, int]:
    """Scan ``s`` as a candidate prenecklace under byte order.

    Returns ``(fail, period)``: ``fail`` is the first index at which the
    prefix ``s[:fail+1]`` stops being a prenecklace (``-1`` if ``s`` is one),
    and ``period`` the Lyndon period of the longest prenecklace prefix.
    """
    p = 1
    for j in range(1, len(s)):
        a = s[j - p]
        b = s[j]
        if b > a:
            p = j + 1
        elif b < a:
            return j, p
    return -1, p


def is_lyndon(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> bool:
    require_nonempty(w)
    fail, period = prenecklace_scan(alphabet.encode(w))
    return fail < 0 and period == len(w)


def is_anti_lyndon(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> bool:
    return is_lyndon(w, alphabet.inverse())


def is_inverse_lyndon(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> bool:
    """True iff every nonempty proper suffix of ``w`` precedes ``w``.

    These are the nonempty prenecklaces of the reversed order, which a single
    Duval-style scan recognizes.
    """
    require_nonempty(w)
    return prenecklace_scan(alphabet.inverse().encode(w))[0] < 0


def cfl(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> list[CompactRun]:
    """Lyndon factorization of ``w`` as runs of strictly decreasing roots."""
    require_nonempty(w)
    return [
        CompactRun(w[i:i + p], e, i) for i, p, e in duval(alphabet.encode(w))
    ]


def cfl_in(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> list[CompactRun]:
    """Lyndon factorization under the inverse order; roots are anti-Lyndon."""
    return cfl(w, alphabet.inverse())


def compact_factors(w: bytes, alphabet: OrderedAlphabet = NATURAL) -> list[CompactRun]:
    return cfl_in(w, alphabet)


def flatten(runs: list[CompactRun]) -> list[bytes]:
    return [r.root for r in runs for _ in range(r.exponent)]


def chain_decompose(
    runs: list[CompactRun], alphabet: OrderedAlphabet = NATURAL
) -> ChainDecomposition:
    """Group consecutive CFL_in runs into maximal prefix chains.

    A run joins the current chain when its root is a prefix of the previous
    root. Raises ContractError unless roots strictly decrease under the
    inverse order.
    """
    if not runs:
        raise ContractError("empty run list")
    inv = alphabet.inverse()
    chains: ChainDecomposition = [[runs[0]]]
    prev = runs[0]
    for run in runs[1:]:
        if run.start != prev.end:
            raise ContractError(f"runs are not contiguous at {run.start}")
        if not inv.encode(run.root) < inv.encode(prev.root):
            raise ContractError(
                f"roots {prev.root!r}, {run.root!r} do not strictly decrease "
                "in the inverse order"
            )
        if prev.root.startswith(run.root):
            chains[-1].append(run)
        else:
            chains.append([run])
        prev = run
    return chains


def chain_spans(chains: ChainDecomposition) -> list[Span]:
    return [(c[0].start, c[-1].end) for c in chains]
