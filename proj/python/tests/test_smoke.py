import itertools

import pytest

import parikh_automata as pa


def words(alphabet, n):
    for k in range(n + 1):
        for t in itertools.product(alphabet, repeat=k):
            yield "".join(t)


def test_corpus_listing():
    names = pa.corpus_names()
    assert "anbn" in names and "pal" in names
    assert pa.corpus("anbn")["kind"] == "ca"


def test_membership_and_decisions():
    anbn = pa.corpus("anbn")
    assert pa.member(anbn, "aabb")
    assert not pa.member(anbn, "aab")
    assert pa.is_empty(pa.corpus("empty"))
    assert pa.cardinality(pa.corpus("two-words")) == ("finite", 2)
    assert pa.cardinality(anbn)[0] == "infinite"
    ok, witness = pa.subset(anbn, pa.corpus("astar-bstar"))
    assert ok and witness is None
    ok, witness = pa.subset(pa.corpus("astar-bstar"), anbn)
    assert not ok and pa.member(pa.corpus("astar-bstar"), witness) and not pa.member(anbn, witness)


def test_constructions():
    anbn = pa.corpus("anbn")
    co = pa.complement(anbn)
    for w in words("ab", 6):
        assert pa.member(co, w) != pa.member(anbn, w)
    closure = pa.comm_closure(pa.corpus("ab-star"))
    assert closure["kind"] == "pa"
    assert pa.member(closure, "bbaa") and not pa.member(closure, "bba")
    union = pa.combine(anbn, pa.corpus("ab-star"), "union")
    assert pa.member(union, "abab") and pa.member(union, "aabb")


def test_affine_and_rbcm():
    pal = pa.corpus("pal")
    two = pa.normalize_two_state(pal)
    assert two["automaton"]["states"] == 2
    nat = pa.q_to_n(pal)
    for w in ["ab#ba", "ab#ab", "a#a", "#"]:
        assert pa.member(nat, w) == pa.member(pal, w) == pa.member(two, w)
    m = pa.to_rbcm(pa.corpus("parity"))
    assert pa.simulate(m, "abba")[0] == "accept"
    assert pa.simulate(m, "aba")[0] == "reject"
    assert pa.simulate(pa.corpus("nsum"), "a♠bb#b♣cc")[0] == "accept"


def test_hilbert_and_pumping():
    particular, homogeneous = pa.hilbert_basis([[2, -3]], [0])
    assert homogeneous == [[3, 2]]
    u, v, x, z = pa.pump(pa.corpus("anbn"), "a" * 11 + "b" * 11)
    assert u + v + x + v + z == "a" * 11 + "b" * 11
    assert pa.nerode(pa.corpus("anbn"), "a", "aa", 3) == "b"


def test_errors():
    with pytest.raises(pa.InvalidArgument):
        pa.corpus("no-such-entry")
    with pytest.raises(pa.Unsupported):
        pa.q_to_n(pa.corpus("expo"))
    with pytest.raises(pa.InvalidArgument):
        pa.member("{not json", "a")
