"""Seeded random formulas and lasso words for self-tests and fuzzing."""

from __future__ import annotations

from . import formula as F

_LEAF_W = 3


def random_letter(rng, ap):
    return frozenset(p for p in ap if rng.random() < 0.5)


def random_lasso(rng, ap, max_prefix=3, max_cycle=3):
    u = tuple(random_letter(rng, ap) for _ in range(rng.randint(0, max_prefix)))
    v = tuple(random_letter(rng, ap) for _ in range(rng.randint(1, max_cycle)))
    from .lasso import LassoWord
    return LassoWord(u, v)


_UNARY = (F.nxt, F.yesterday, F.wyesterday)
_BINARY = (F.conj, F.disj, F.until, F.wuntil, F.release, F.srelease,
           F.since, F.wsince, F.back, F.wback)


def random_formula(rng, ap, depth=3, allow_past=True):
    """A random NNF formula with syntax-tree depth at most ``depth``."""
    unary = _UNARY if allow_past else _UNARY[:1]
    binary = _BINARY if allow_past else _BINARY[:6]
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.05:
            return F.true()
        if r < 0.1:
            return F.false()
        name = rng.choice(ap)
        return F.prop(name) if rng.random() < 0.6 else F.nprop(name)
    if rng.random() < 0.35:
        return rng.choice(unary)(
            random_formula(rng, ap, depth - 1, allow_past))
    op = rng.choice(binary)
    return op(random_formula(rng, ap, depth - 1, allow_past),
              random_formula(rng, ap, depth - 1, allow_past))


def random_formula_bounded(rng, ap, max_size=6, max_past=2, depth=3,
                           allow_past=True, tries=500):
    """Retry :func:`random_formula` until the size budget is met."""
    for _ in range(tries):
        f = random_formula(rng, ap, depth, allow_past)
        n, m = F.size(f)
        if n + m <= max_size and len(F.psf(f)) <= max_past:
            return f
    return F.prop(ap[0])
