import json

import pytest

from conftest import AB, ABC, ABCD
from lynkit.core import Factorization, OrderedAlphabet
from lynkit.icfl import is_inverse_lyndon_factorization
from lynkit.oracle import (
    EnumerationBoundError,
    TheoremViolation,
    brute_cfl,
    brute_has_border_property,
    brute_is_compact,
    brute_is_grouping,
    brute_is_lyndon,
    check_word,
    compositions,
    enumerate_ilfs,
    verify_claims,
    words,
)


def names(fs):
    return [str(f) for f in fs]


def test_compositions_order_and_count():
    cs = list(compositions(4))
    assert len(cs) == 8
    assert cs[0] == (1, 2, 3) and cs[-1] == ()


def test_enumerate_ilfs_three_candidates():
    z = b"dabdadacddbdc"
    found = names(enumerate_ilfs(z, ABCD))
    for expected in ("dab|dadacd|db|dc", "dabda|dac|ddbdc", "dab|dadac|ddbdc"):
        assert expected in found
    assert found == sorted(found, key=lambda s: [len(p) for p in s.split("|")])
    with_border = [f for f in enumerate_ilfs(z, ABCD) if brute_has_border_property(f)]
    assert names(with_border) == ["dab|dadac|ddbdc"]


def test_enumerate_ilfs_members_are_ilfs():
    for w in words(ABC, 6):
        for f in enumerate_ilfs(w, ABC):
            assert is_inverse_lyndon_factorization(f, ABC)


def test_enumerate_ilfs_single_symbol():
    assert names(enumerate_ilfs(b"a", AB)) == ["a"]


def test_enumerate_bound():
    with pytest.raises(EnumerationBoundError):
        enumerate_ilfs(b"a" * 17, AB)
    assert len(enumerate_ilfs(b"a" * 17, AB, bound=20)) == 1


@pytest.mark.parametrize("w,expected", [(b"aabab", True), (b"abaab", False), (b"aa", False)])
def test_brute_is_lyndon(w, expected):
    assert brute_is_lyndon(w, AB) is expected


def test_brute_cfl():
    assert names([brute_cfl(b"aba", AB)]) == ["ab|a"]
    assert names([brute_cfl(b"aababaabb", AB)]) == ["aababaabb"]
    with pytest.raises(EnumerationBoundError):
        brute_cfl(b"a" * 20, AB)


def test_brute_grouping_and_compact():
    y = b"dabadabdabdabdadac"
    compact = Factorization.from_factors([b"daba", b"dabdabdab", b"dadac"])
    grouping = Factorization.from_factors([b"dabadab", b"dabdab", b"dadac"])
    assert brute_is_grouping(compact, ABCD, bound=32)
    assert brute_is_compact(compact, ABCD, bound=32)
    assert brute_is_grouping(grouping, ABCD, bound=32)
    assert not brute_is_compact(grouping, ABCD, bound=32)
    assert grouping.word == compact.word == y
    notg = Factorization.from_factors([b"dabadab", b"dabda", b"dac"])
    assert not brute_is_grouping(notg, ABCD)


def test_check_word_report():
    r = check_word(b"dabdadacddbdc", ABCD)
    assert r.passed
    assert len(r.border_ilfs) == 1
    rec = r.to_record()
    assert json.loads(json.dumps(rec))["passed"] is True


def test_verify_claims_maxlen_one():
    reports = verify_claims(1, ABC)
    assert [r.word for r in reports] == [b"a", b"b", b"c"]
    for r in reports:
        assert [f.factors for f in r.all_ilfs] == [[r.word]]
        assert r.passed


def test_verify_claims_small_universe():
    reports = verify_claims(8, AB)
    assert len(reports) == 2 ** 9 - 2
    assert all(r.passed for r in reports)


def test_verify_claims_parallel_matches_serial():
    serial = verify_claims(6, ABC)
    parallel = verify_claims(6, ABC, workers=2, chunk=100)
    assert [r.word for r in parallel] == [r.word for r in serial]
    assert [r.verdicts for r in parallel] == [r.verdicts for r in serial]


def test_verify_claims_refuses_big_maxlen():
    with pytest.raises(EnumerationBoundError):
        verify_claims(40, AB)


def test_verify_claims_reversed_order():
    assert all(r.passed for r in verify_claims(9, OrderedAlphabet(b"ba")))


def test_theorem_violation_is_assertion():
    assert issubclass(TheoremViolation, AssertionError)
