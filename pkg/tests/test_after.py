import random

import pytest

from pastdra import formula as F
from pastdra import lasso as L
from pastdra import proplogic as P
from pastdra.after import af, af_bool, af_ext, af_loc, af_loc_ext, pu_loc
from pastdra.gen import random_formula_bounded, random_lasso
from pastdra.stability import entailed_seq

parse = F.parse
EMPTY = frozenset()


def test_af_loc_propositions():
    p = parse("p")
    assert af_loc(p, {"p"}, EMPTY) is F.true()
    assert af_loc(p, frozenset(), EMPTY) is F.false()
    assert af_loc(parse("!p"), {"p"}, EMPTY) is F.false()
    assert af_loc(parse("!p"), {"q"}, EMPTY) is F.true()
    assert af_loc(F.true(), frozenset(), EMPTY) is F.true()
    assert af_loc(F.false(), {"p"}, EMPTY) is F.false()


def test_af_loc_yesterday_is_letterblind():
    # strong yesterday fails at the first instant, weak succeeds
    for sigma in (frozenset(), frozenset({"p"})):
        assert af_loc(parse("Y p"), sigma, EMPTY) is F.false()
        assert af_loc(parse("wY p"), sigma, EMPTY) is F.true()


def test_af_loc_always():
    g = parse("G p")
    assert P.prop_equiv(af_loc(g, {"p"}, EMPTY), g)
    assert P.prop_equiv(af_loc(g, frozenset(), EMPTY), F.false())


def test_af_loc_until_unfolding():
    f = parse("p U q")
    assert P.prop_equiv(af_loc(f, {"q"}, EMPTY), F.true())
    assert P.prop_equiv(af_loc(f, {"p"}, EMPTY), f)
    assert P.prop_equiv(af_loc(f, frozenset(), EMPTY), F.false())


def test_af_loc_past_defers_to_weakening_condition():
    f = parse("p S q")
    C = frozenset({f})
    # wc(p S q) = q, so under either assumption the step only reads sigma
    assert af_loc(f, {"q"}, EMPTY) is F.true()
    assert af_loc(f, {"p"}, C) is F.false()
    assert af_loc(f, {"q"}, C) is F.true()


def test_pu_loc_charges_weakening_conditions():
    f = parse("p S X q")
    C = frozenset({f})
    got = pu_loc(F.nxt(f), {"p"}, C)
    # carried formula weakened, plus the owed wc = X q pushed one step
    assert P.prop_equiv(got, F.conj(parse("X(p wS X q)"), parse("q")))
    assert pu_loc(F.nxt(f), {"p"}, EMPTY) is F.nxt(f)


def test_af_canonical_example():
    f = parse("X(p S X q)")
    b = af_bool(f, frozenset({"p"}))
    assert b is P.canonicalize(parse("(p S X q) | ((p wS X q) & q)"))
    # the printed representative is propositionally, maybe not literally,
    # that formula
    assert P.canonicalize(af(f, {"p"})) is b


def test_af_loc_ext_length_check():
    f = parse("Y p")
    with pytest.raises(ValueError):
        af_loc_ext(f, [frozenset({"p"})], [EMPTY])


def test_af_ext_empty_word():
    f = parse("p U q")
    assert P.prop_equiv(af_ext(f, []), f)


def test_af_ext_matches_local_derivative_on_true_past_sets():
    # folding with the entailed past sets never leaves the canonical class
    # of the all-guesses fold once the word is fixed
    rng = random.Random(11)
    for _ in range(150):
        f = random_formula_bounded(rng, ("p", "q"), max_size=5, max_past=2)
        w = random_lasso(rng, ("p", "q"))
        t = rng.randrange(4)
        seq = entailed_seq(f, w, t)
        word = [w.letter(i) for i in range(t)]
        loc = af_loc_ext(f, word, seq)
        assert L.holds(loc, w.suffix(t), 0) == L.holds(f, w, 0)


def test_af_ext_verdict_matches_semantics():
    rng = random.Random(12)
    for _ in range(150):
        f = random_formula_bounded(rng, ("p", "q"), max_size=5, max_past=2)
        w = random_lasso(rng, ("p", "q"))
        t = rng.randrange(4)
        g = af_ext(f, [w.letter(i) for i in range(t)])
        if g is F.true():
            assert L.holds(f, w, 0)
        if g is F.false():
            assert not L.holds(f, w, 0)
