"""Deterministic omega-automata with explicit, complete transition tables.

States are integers in discovery order; the alphabet is the powerset of the
atomic propositions, with letter index ``i`` setting proposition ``ap[j]``
iff bit ``j`` of ``i`` is set.  Acceptance is one of

* ``("buchi", S)``    -- accept iff Inf intersects S,
* ``("cobuchi", S)``  -- accept iff Inf avoids S,
* ``("rabin", pairs)``-- accept iff some pair (A, B) has Inf avoiding A and
  intersecting B.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count


def letters_for(ap):
    ap = tuple(ap)
    return [frozenset(p for j, p in enumerate(ap) if i >> j & 1)
            for i in range(1 << len(ap))]


@dataclass
class OmegaAutomaton:
    ap: tuple                 # sorted proposition names
    init: int
    trans: list               # trans[state][letter_index] -> state
    labels: list              # human-readable state annotations
    acc: tuple                # acceptance as described above

    @property
    def letters(self):
        return letters_for(self.ap)

    def n_states(self):
        return len(self.trans)

    def letter_index(self, sigma):
        return sum(1 << j for j, p in enumerate(self.ap) if p in sigma)

    def audit(self):
        """Check determinism, completeness and acceptance well-formedness."""
        n, width = len(self.trans), 1 << len(self.ap)
        assert 0 <= self.init < n
        assert len(self.labels) == n
        for row in self.trans:
            assert len(row) == width
            assert all(isinstance(q, int) and 0 <= q < n for q in row)
        kind = self.acc[0]
        if kind in ("buchi", "cobuchi"):
            assert all(0 <= q < n for q in self.acc[1])
        else:
            assert kind == "rabin"
            for a, b in self.acc[1]:
                assert all(0 <= q < n for q in a | b)
        return True


@dataclass
class BedAutomaton:
    """The acceptance-free component other automata are cascaded onto."""
    ap: tuple
    init: int
    trans: list
    labels: list
    state_objs: list          # opaque payload per state, passed to runners

    def letter_index(self, sigma):
        return sum(1 << j for j, p in enumerate(self.ap) if p in sigma)


class Runner:
    """A deterministic transition system that also observes the bed state.

    ``step(q, bed_obj, sigma)`` sees the bed state *reached* on the current
    letter.  ``acc_kind`` is "buchi"/"cobuchi" with ``accepting(q)``, or
    "rabin" with ``pairs`` a list of (avoid_pred, meet_pred) on states.
    """

    def __init__(self, init, step, acc_kind, accepting=None, pairs=None,
                 label=str):
        self.init = init
        self.step = step
        self.acc_kind = acc_kind
        self.accepting = accepting
        self.pairs = pairs
        self.label = label


class StateLimitExceeded(Exception):
    pass


def _explore(ap, init_state, succ, max_states=None):
    """Generic deterministic BFS materialization; returns index maps."""
    letters = letters_for(ap)
    index = {init_state: 0}
    order = [init_state]
    trans = []
    i = 0
    while i < len(order):
        q = order[i]
        row = []
        for sigma in letters:
            q2 = succ(q, sigma)
            j = index.get(q2)
            if j is None:
                j = len(order)
                if max_states is not None and j >= max_states:
                    raise StateLimitExceeded(max_states)
                index[q2] = j
                order.append(q2)
            row.append(j)
        trans.append(row)
        i += 1
    return order, index, trans


def cascade(bed, runner, max_states=None):
    """Product of a bed automaton with a runner observing its next state."""
    ap = bed.ap

    def succ(pair, sigma):
        q, s = pair
        li = bed.letter_index(sigma)
        s2 = bed.trans[s][li]
        return (runner.step(q, bed.state_objs[s2], sigma), s2)

    init = (runner.init, bed.init)
    order, index, trans = _explore(ap, init, succ, max_states)
    labels = ["%s | %s" % (runner.label(q), bed.labels[s])
              for (q, s) in order]
    if runner.acc_kind in ("buchi", "cobuchi"):
        acc = (runner.acc_kind,
               frozenset(i for i, (q, _) in enumerate(order)
                         if runner.accepting(q)))
    else:
        acc = ("rabin",
               tuple((frozenset(i for i, (q, _) in enumerate(order)
                                if avoid(q)),
                      frozenset(i for i, (q, _) in enumerate(order)
                                if meet(q)))
                     for avoid, meet in runner.pairs))
    return OmegaAutomaton(ap, 0, trans, labels, acc)


def rabin_conjunction(cobuchis, buchis, max_states=None):
    """Intersection as a one-pair Rabin automaton.

    All components run in lockstep; a round-robin counter watches the Büchi
    components and raises a tick whenever it has seen each of them accept
    once more.  The pair rejects on any co-Büchi violation recurring and
    demands recurring ticks.
    """
    comps = list(cobuchis) + list(buchis)
    if not comps:
        raise ValueError("need at least one component")
    ap = comps[0].ap
    assert all(c.ap == ap for c in comps)
    nc = len(cobuchis)
    nb = len(buchis)

    def succ(state, sigma):
        qs, rr, _ = state
        qs2 = tuple(c.trans[q][c.letter_index(sigma)]
                    for c, q in zip(comps, qs))
        rr2, tick = rr, False
        if nb and qs[nc + rr] in buchis[rr].acc[1]:
            rr2 = (rr + 1) % nb
            tick = rr2 == 0
        elif not nb:
            tick = True
        return (qs2, rr2, tick)

    init = (tuple(c.init for c in comps), 0, False)
    order, index, trans = _explore(ap, init, succ, max_states)
    bad = frozenset(i for i, (qs, _, _) in enumerate(order)
                    if any(q in c.acc[1] for c, q in zip(cobuchis, qs)))
    good = frozenset(i for i, (_, _, tick) in enumerate(order) if tick)
    labels = [" & ".join([cobuchis[j].labels[qs[j]] for j in range(nc)]
                         + [buchis[j].labels[qs[nc + j]] for j in range(nb)])
              for (qs, _, _) in order]
    return OmegaAutomaton(ap, 0, trans, labels,
                          ("rabin", ((bad, good),)))


def rabin_union(autos, max_states=None):
    """Union of deterministic Rabin automata by full product, pairs lifted."""
    autos = list(autos)
    if not autos:
        raise ValueError("need at least one automaton")
    ap = autos[0].ap
    assert all(a.ap == ap for a in autos)

    def succ(qs, sigma):
        return tuple(a.trans[q][a.letter_index(sigma)]
                     for a, q in zip(autos, qs))

    init = tuple(a.init for a in autos)
    order, index, trans = _explore(ap, init, succ, max_states)
    pairs = []
    for j, a in enumerate(autos):
        for avoid, meet in a.acc[1]:
            pairs.append((frozenset(i for i, qs in enumerate(order)
                                    if qs[j] in avoid),
                          frozenset(i for i, qs in enumerate(order)
                                    if qs[j] in meet)))
    labels = [" || ".join(a.labels[q] for a, q in zip(autos, qs))
              for qs in order]
    return OmegaAutomaton(ap, 0, trans, labels, ("rabin", tuple(pairs)))


def accepts(auto, word):
    """Whether the automaton accepts the lasso word.

    Letters are restricted to the automaton's propositions; the run is
    followed until the (state, word-phase) pair repeats, which delimits the
    set of states visited infinitely often.
    """
    apset = set(auto.ap)
    q = auto.init
    seen = {}
    trace = []
    t = 0
    while True:
        key = (q, word.phase(t))
        if key in seen:
            lo = seen[key]
            inf = set(trace[lo:])
            break
        seen[key] = t
        trace.append(q)
        sigma = word.letter(t) & apset
        q = auto.trans[q][auto.letter_index(sigma)]
        t += 1
    kind, data = auto.acc
    if kind == "buchi":
        return bool(inf & data)
    if kind == "cobuchi":
        return not inf & data
    return any(not inf & avoid and inf & meet for avoid, meet in data)
