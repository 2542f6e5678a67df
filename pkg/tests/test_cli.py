import io
import json
import subprocess
import sys

import pytest

from lynkit import cli


def run(argv, stdin=b""):
    proc = subprocess.run(
        [sys.executable, "-m", "lynkit.cli", *argv],
        input=stdin,
        capture_output=True,
    )
    return proc.returncode, proc.stdout.decode("latin-1"), proc.stderr.decode()


def test_factorize_icfl_text():
    code, out, _ = run(["factorize", "--mode", "icfl", "--order", "abcd"], b"dabadabdabdadac\n")
    assert code == 0
    assert out == "daba|dabdab|dadac\n"


def test_factorize_cfl_in_text():
    code, out, _ = run(["factorize", "--mode", "cfl-in"], b"dabadabdabdadac\n")
    assert code == 0
    assert out == "daba|dab|dab|dadac\n"


def test_factorize_single_symbol_and_missing_final_newline():
    code, out, _ = run(["factorize"], b"q")
    assert (code, out) == (0, "q\n")


def test_factorize_custom_delim():
    code, out, _ = run(["factorize", "--delim", " "], b"dabdadacddbdc\n")
    assert out == "dab dadac ddbdc\n"


@pytest.mark.parametrize("mode", cli.MODES)
def test_json_round_trip_and_agreement_with_text(mode):
    lines = [b"dabadabdabdadac", b"dabdadacddbdc", b"bbababbaa", b"zyzzyx", b"\x00\xff\x00"]
    data = b"\n".join(lines) + b"\n"
    code, js, _ = run(["factorize", "--mode", mode, "--json"], data)
    assert code == 0
    code, txt, _ = run(["factorize", "--mode", mode, "--delim", "\x01"], data)
    records = [json.loads(line) for line in js.splitlines()]
    for word, rec, text in zip(lines, records, txt.split("\n")):
        assert rec["mode"] == mode and rec["word_len"] == len(word)
        assert b"".join(word[s:e] for s, e in rec["spans"]) == word
        assert [f.encode("latin-1") for f in rec["factors"]] == [word[s:e] for s, e in rec["spans"]]
        assert text.split("\x01") == rec["factors"]


def test_icfl_modes_agree():
    data = b"dabadabdabdabdadac\nabracadabra\n"
    assert run(["factorize", "--mode", "icfl"], data)[1] == run(
        ["factorize", "--mode", "icfl-recursive"], data
    )[1]


def test_chains_and_compact_modes():
    _, out, _ = run(["factorize", "--mode", "compact", "--json"], b"dabadabdabdabdadac\n")
    assert json.loads(out)["factors"] == ["daba", "dabdabdab", "dadac"]
    _, out, _ = run(["factorize", "--mode", "chains"], b"dabadabdabdadac\n")
    assert out == "dabadabdab|dadac\n"


def test_per_line_errors_continue():
    data = b"dab\n\nxyz\ndadac\n"
    code, out, err = run(["factorize", "--order", "abcd"], data)
    assert code == 1
    assert out.split("\n") == ["dab", "", "", "dadac", ""]
    assert "line 2" in err and "line 3" in err
    code, out, _ = run(["factorize", "--order", "abcd", "--json"], data)
    recs = [json.loads(x) for x in out.splitlines()]
    assert [r.get("line") for r in recs] == [None, 2, 3, None]
    assert "error" in recs[1]


def test_bad_order_and_unreadable_file():
    assert run(["factorize", "--order", "aab"], b"a\n")[0] == 2
    assert run(["factorize", "/nonexistent/file"])[0] == 2
    assert run(["factorize", "--mode", "bogus"])[0] == 2


def test_factorize_reads_file(tmp_path):
    p = tmp_path / "in.txt"
    p.write_bytes(b"dabadabdabdadac\ndabdadacddbdc")
    code, out, _ = run(["factorize", str(p)])
    assert code == 0 and out == "daba|dabdab|dadac\ndab|dadac|ddbdc\n"


def test_verify_summary_and_exit():
    code, out, _ = run(["verify", "--maxlen", "10", "--alphabet", "ab"])
    assert code == 0
    assert "0 failures" in out and "2046 words checked" in out


def test_verify_single_word_and_refusal():
    code, out, _ = run(["verify", "--maxlen", "1", "--alphabet", "a"])
    assert code == 0 and "1 words checked" in out
    code, _, err = run(["verify", "--maxlen", "40", "--alphabet", "ab"])
    assert code == 2 and "exceeds" in err


def test_verify_json_records():
    code, out, err = run(["verify", "--maxlen", "3", "--alphabet", "ab", "--json"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(recs) == 14
    assert all(r["passed"] for r in recs)
    assert "14 words checked" in err


def test_enumerate_word():
    code, out, _ = run(["enumerate", "--word", "dabdadacddbdc", "--alphabet", "abcd"])
    assert code == 0
    marked = [line for line in out.splitlines() if line.endswith(" *")]
    assert marked == ["dabdadacddbdc\tdab|dadac|ddbdc *"]
    assert "dabdadacddbdc\tdabda|dac|ddbdc" in out.splitlines()


def test_enumerate_universe_json():
    code, out, _ = run(["enumerate", "--maxlen", "2", "--alphabet", "ab", "--json"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [r["word"] for r in recs] == ["a", "b", "aa", "ab", "ba", "bb"]
    assert all(sum(r["border_property"]) == 1 for r in recs)
    assert run(["enumerate", "--maxlen", "40", "--alphabet", "ab"])[0] == 2


@pytest.mark.parametrize(
    "pattern,compact,icfl_n",
    [("single-symbol", 1, 1), ("periodic", 1, 1)],
)
def test_bench_patterns(pattern, compact, icfl_n):
    out = io.StringIO()
    args = cli.build_parser().parse_args(
        ["bench", "--size", "3000", "--pattern", pattern, "--repetitions", "1"]
    )
    assert cli.cmd_bench(args, out) == 0
    rows = out.getvalue().splitlines()[2:]
    assert len(rows) == 3
    for row in rows:
        cols = row.split()
        assert (int(cols[-2]), int(cols[-1])) == (compact, icfl_n)


def test_bench_json():
    code, out, _ = run(["bench", "--size", "1000", "--pattern", "random", "--json"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [r["size"] for r in recs] == [1000, 2000, 4000]
