import pytest

from pastdra.automata import (BedAutomaton, OmegaAutomaton, Runner,
                              StateLimitExceeded, accepts, cascade,
                              letters_for, rabin_conjunction, rabin_union)
from pastdra.lasso import parse_word


def test_letters_for_order():
    assert letters_for(()) == [frozenset()]
    assert letters_for(("p", "q")) == [
        frozenset(), frozenset({"p"}), frozenset({"q"}), frozenset({"p", "q"})]


def _mod_counter(ap, n, acc):
    # counts letters mod n, ignores the alphabet
    width = 1 << len(ap)
    return OmegaAutomaton(
        ap=tuple(ap), init=0,
        trans=[[(q + 1) % n] * width for q in range(n)],
        labels=[str(q) for q in range(n)], acc=acc)


def _p_tracker(acc):
    # state 1 iff the last letter contained p
    return OmegaAutomaton(
        ap=("p",), init=0,
        trans=[[0, 1], [0, 1]],
        labels=["!p", "p"], acc=acc)


def test_audit_accepts_wellformed():
    assert _p_tracker(("buchi", frozenset({1}))).audit()
    assert _mod_counter(("p",), 3, ("rabin",
                                    [(frozenset({0}), frozenset({1}))])).audit()


def test_audit_rejects_bad_transition():
    a = _p_tracker(("buchi", frozenset({1})))
    a.trans[0][1] = 7
    with pytest.raises(AssertionError):
        a.audit()


def test_accepts_buchi():
    a = _p_tracker(("buchi", frozenset({1})))
    assert accepts(a, parse_word("; {p}"))
    assert accepts(a, parse_word("; {p},{}"))
    assert not accepts(a, parse_word("{p} ; {}"))


def test_accepts_cobuchi():
    a = _p_tracker(("cobuchi", frozenset({1})))
    assert not accepts(a, parse_word("; {p},{}"))
    assert accepts(a, parse_word("{p},{p} ; {}"))


def test_accepts_rabin():
    # avoid state 1 while meeting state 0 infinitely often
    a = _p_tracker(("rabin", [(frozenset({1}), frozenset({0}))]))
    assert accepts(a, parse_word("{p} ; {}"))
    assert not accepts(a, parse_word("; {}, {p}"))


def test_accepts_ignores_foreign_props():
    a = _p_tracker(("buchi", frozenset({1})))
    assert accepts(a, parse_word("; {p,q}"))


def test_rabin_union_is_language_union():
    lets = [parse_word("; {p}"), parse_word("; {}"),
            parse_word("{p} ; {}"), parse_word("; {p},{}")]
    a = _p_tracker(("rabin", [(frozenset(), frozenset({1}))]))   # inf p
    b = _p_tracker(("rabin", [(frozenset({1}), frozenset({0}))]))  # fin p
    u = rabin_union([a, b])
    u.audit()
    for w in lets:
        assert accepts(u, w) == (accepts(a, w) or accepts(b, w))


def _last_letter_tracker(ap, prop, acc):
    # state 1 iff the last letter contained the given proposition
    lets = letters_for(ap)
    return OmegaAutomaton(
        ap=tuple(ap), init=0,
        trans=[[1 if prop in s else 0 for s in lets]] * 2,
        labels=["!" + prop, prop], acc=acc)


def test_rabin_conjunction_single_pair():
    # Büchi "p infinitely often" and co-Büchi "q finitely often" conjoined
    ap = ("p", "q")
    buchi = _last_letter_tracker(ap, "p", ("buchi", frozenset({1})))
    cob = _last_letter_tracker(ap, "q", ("cobuchi", frozenset({1})))
    a = rabin_conjunction([cob], [buchi])
    a.audit()
    assert a.acc[0] == "rabin" and len(a.acc[1]) == 1
    assert accepts(a, parse_word("; {p}"))
    assert accepts(a, parse_word("{q} ; {p},{}"))
    assert not accepts(a, parse_word("; {p,q}"))
    assert not accepts(a, parse_word("; {}"))


def test_cascade_runner_sees_reached_bed_state():
    # bed flips between two states on p; the runner copies what it observes
    bed = BedAutomaton(ap=("p",), init=0,
                       trans=[[0, 1], [1, 0]], labels=["a", "b"],
                       state_objs=["a", "b"])
    run = Runner(init="a", step=lambda q, obj, s: obj,
                 acc_kind="buchi", accepting=lambda q: q == "b")
    a = cascade(bed, run)
    a.audit()
    assert accepts(a, parse_word("{p} ; {}"))  # bed reaches b and stays
    assert not accepts(a, parse_word("; {}"))  # bed never leaves a


def test_cascade_state_limit():
    bed = BedAutomaton(ap=("p",), init=0, trans=[[0, 0]], labels=["-"],
                       state_objs=[None])
    run = Runner(init=0, step=lambda q, obj, s: q + 1,
                 acc_kind="buchi", accepting=lambda q: False)
    with pytest.raises(StateLimitExceeded):
        cascade(bed, run, max_states=10)
