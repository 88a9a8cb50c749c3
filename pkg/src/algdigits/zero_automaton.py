"""The automaton Z(H) recognizing the words (d_m, ..., d_0) over the
digit alphabet {-H, ..., H} whose value sum d_j alpha^j is exactly 0.

States are ring elements; reading digit d in state y moves to alpha*y +
d, so a word is accepted exactly when its Horner evaluation returns to
0.  Transitions are exact, which makes the accepted language sound by
construction: any kept path from 0 to 0 certifies a zero word.  For
completeness, a successor is discarded only when certified interval
arithmetic proves some expanding conjugate exceeds H/(|alpha_k| - 1),
the invariant every prefix evaluation of a zero word satisfies;
contracting conjugates stay bounded by induction and need no check.

Bases with a conjugate on the unit circle have no finite such automaton
and are refused; irrational bases are supported when the minimal
polynomial is monic, rational ones (including integers) always.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .base import AlgebraicBase, make_base
from .errors import ResourceCapError, UnitCircleError, UnsupportedBaseError
from .intervals import Box, Interval
from .polynomials import IntPolynomial

DEFAULT_MAX_STATES = 1_000_000


def _coerce(base) -> AlgebraicBase:
    if isinstance(base, AlgebraicBase):
        return base
    return make_base(base)


@dataclass(frozen=True)
class WordSearchResult:
    """A digit word found by automaton search, most significant digit
    first; the leading digit is nonzero and value_check records an
    exact re-evaluation of the word at alpha."""

    word: tuple
    height: int
    value_check: bool


@dataclass(frozen=True)
class ZeroAutomaton:
    base: AlgebraicBase
    height: int
    states: tuple
    transitions: dict  # (state, digit) -> state
    level: dict        # state -> index of the first breadth layer holding it
    trimmed: bool

    @property
    def zero(self):
        return self.base.zero

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_edges(self) -> int:
        return len(self.transitions)

    def accepts(self, word) -> bool:
        """Most significant digit first."""
        state = self.zero
        for d in word:
            state = self.transitions.get((state, d))
            if state is None:
                return False
        return state == self.zero

    def accepts_lsb(self, word) -> bool:
        """Least significant digit first (the mirrored language)."""
        return self.accepts(tuple(reversed(tuple(word))))

    def language(self, length: int):
        """All accepted words of exactly the given length, in
        lexicographic order."""
        out = []

        def walk(state, prefix):
            if len(prefix) == length:
                if state == self.zero:
                    out.append(tuple(prefix))
                return
            for d in range(-self.height, self.height + 1):
                nxt = self.transitions.get((state, d))
                if nxt is not None:
                    prefix.append(d)
                    walk(nxt, prefix)
                    prefix.pop()

        walk(self.zero, [])
        return out

    def trim(self) -> "ZeroAutomaton":
        """Restrict to states that can still reach 0.  All states are
        reachable from 0 by construction, so the result is trim and the
        accepted language is unchanged."""
        reverse: dict = {}
        for (y, _d), z in self.transitions.items():
            reverse.setdefault(z, set()).add(y)
        alive = {self.zero}
        queue = deque([self.zero])
        while queue:
            z = queue.popleft()
            for y in reverse.get(z, ()):
                if y not in alive:
                    alive.add(y)
                    queue.append(y)
        states = tuple(s for s in self.states if s in alive)
        transitions = {(y, d): z for (y, d), z in self.transitions.items()
                       if y in alive and z in alive}
        level = {s: self.level[s] for s in states}
        return ZeroAutomaton(self.base, self.height, states, transitions,
                             level, True)

    def has_nontrivial_word(self) -> bool:
        """True when some accepted word uses a nonzero digit.  On a trim
        automaton every edge lies on an accepting path, so this reduces
        to an edge scan."""
        auto = self if self.trimmed else self.trim()
        return any(d != 0 for (_y, d) in auto.transitions)

    def shortest_nonzero_word(self):
        """A shortest accepted word containing a nonzero digit (MSB
        first), as a WordSearchResult, or None.  The leading digit is
        automatically nonzero: a word starting with 0 would have a
        shorter accepted suffix with the same nonzero digit."""
        start = (self.zero, False)
        parent: dict = {start: None}
        queue = deque([start])
        target = (self.zero, True)
        while queue:
            node = queue.popleft()
            y, dirty = node
            for d in range(-self.height, self.height + 1):
                z = self.transitions.get((y, d))
                if z is None:
                    continue
                nxt = (z, dirty or d != 0)
                if nxt not in parent:
                    parent[nxt] = (node, d)
                    if nxt == target:
                        digits = []
                        cur = nxt
                        while parent[cur] is not None:
                            cur, digit = parent[cur]
                            digits.append(digit)
                        word = tuple(reversed(digits))
                        check = self.base.eval_word(word) == self.zero
                        return WordSearchResult(word,
                                                max(abs(d) for d in word),
                                                check)
                    queue.append(nxt)
        return None

    def count_words(self, length: int) -> int:
        """Exact number of accepted words of the given length."""
        if length < 0:
            raise ValueError("length must be nonnegative")
        vec = {self.zero: 1}
        for _ in range(length):
            nxt: dict = {}
            for (y, _d), z in self.transitions.items():
                c = vec.get(y)
                if c:
                    nxt[z] = nxt.get(z, 0) + c
            vec = nxt
        return vec.get(self.zero, 0)

    def growth_rate(self, iterations: int = 200) -> tuple:
        """(estimate, residual) for the dominant growth factor of the
        accepted-word counts, by power iteration on the trim transition
        multigraph."""
        auto = self if self.trimmed else self.trim()
        if not auto.states:
            return 0.0, 0.0
        index = {s: i for i, s in enumerate(auto.states)}
        import numpy as np

        n = len(auto.states)
        mat = np.zeros((n, n))
        for (y, _d), z in auto.transitions.items():
            mat[index[z], index[y]] += 1.0
        vec = np.ones(n) / n
        est = 0.0
        for _ in range(iterations):
            nxt = mat @ vec
            norm = float(np.linalg.norm(nxt))
            if norm == 0.0:
                return 0.0, 0.0
            est = norm / float(np.linalg.norm(vec))
            vec = nxt / norm
        residual = float(np.max(np.abs(mat @ vec - est * vec)))
        return est, residual

    def to_json_dict(self) -> dict:
        index = {s: i for i, s in enumerate(self.states)}
        transitions = sorted((index[y], d, index[z])
                             for (y, d), z in self.transitions.items())

        def encode(s):
            if isinstance(s, tuple):
                return list(s)
            return int(s)  # degree-one states are integral by construction

        return {
            "H": self.height,
            "base": str(self.base.min_poly),
            "states": [encode(s) for s in self.states],
            "transitions": [list(t) for t in transitions],
            "initial": index[self.zero],
            "final": index[self.zero],
        }

    def to_dot(self) -> str:
        def label(s):
            if isinstance(s, tuple):
                return "(" + ",".join(str(c) for c in s) + ")"
            return str(s)

        lines = ["digraph zero {", "  rankdir=LR;", "  node [shape=circle];",
                 f'  "{label(self.zero)}" [shape=doublecircle];']
        for (y, d), z in sorted(self.transitions.items(),
                                key=lambda item: (self.states.index(item[0][0]),
                                                  item[0][1])):
            lines.append(f'  "{label(y)}" -> "{label(z)}" [label="{d}"];')
        lines.append("}")
        return "\n".join(lines)


def build_zero_automaton(base, height: int, *,
                         max_states: int = DEFAULT_MAX_STATES,
                         refine_passes: int = 3,
                         jobs: int = 1) -> ZeroAutomaton:
    """Construct Z(height) for the given base (an AlgebraicBase, a
    polynomial, or a polynomial string)."""
    base = _coerce(base)
    if height < 1:
        raise ValueError("height must be at least 1")
    if base.n_unit > 0:
        raise UnitCircleError(
            f"{base.min_poly} has {base.n_unit} conjugate(s) on the unit "
            "circle; no finite automaton recognizes its zero words")
    if base.degree == 1:
        states, transitions, level = _build_rational(base, height, max_states)
    elif base.is_monic:
        states, transitions, level = _build_monic(base, height, max_states,
                                                  refine_passes, jobs)
    else:
        raise UnsupportedBaseError(
            "irrational bases need a monic minimal polynomial here "
            "(denominator ideals are not supported)")
    return ZeroAutomaton(base, height, states, transitions, level, False)


def _build_rational(base: AlgebraicBase, height: int, max_states: int):
    """States are the rational integers within the invariant band; a
    transition exists when alpha*y + d is again an integer, which needs
    q | y.  A state not divisible by q is a dead end: its denominator
    valuation only sinks further, so no continuation returns to 0."""
    alpha = base.alpha_fraction
    p, q = alpha.numerator, alpha.denominator
    if abs(p) > q:
        # |x| <= H / (|alpha| - 1), exactly
        def in_band(x: int) -> bool:
            return abs(x) * (abs(p) - q) <= height * q
    else:
        # |x| <= H / (1 - |alpha|); forward-invariant, so this prunes
        # nothing reachable and only guards the closure
        def in_band(x: int) -> bool:
            return abs(x) * (q - abs(p)) <= height * q
    level = {0: 1}
    frontier = [0]
    transitions = {}
    depth = 1
    while frontier:
        depth += 1
        nxt = []
        for y in frontier:
            if y % q != 0:
                continue
            ay = p * (y // q)
            for d in range(-height, height + 1):
                z = ay + d
                if not in_band(z):
                    continue
                transitions[(Fraction(y), d)] = Fraction(z)
                if z not in level:
                    if len(level) >= max_states:
                        raise ResourceCapError(
                            f"state cap {max_states} exceeded")
                    level[z] = depth
                    nxt.append(z)
        frontier = nxt
    states = tuple(Fraction(v) for v in sorted(level))
    levels = {Fraction(v): j for v, j in level.items()}
    return states, transitions, levels


def _build_monic(base: AlgebraicBase, height: int, max_states: int,
                 refine_passes: int, jobs: int):
    """Breadth-first closure from 0 with certified pruning.  The whole
    search is rerun after each refinement pass so the result depends
    only on the final interval width, never on traversal or thread
    order."""
    for attempt in range(refine_passes + 1):
        result, exact = _monic_pass(base, height, max_states, jobs)
        if exact or attempt == refine_passes:
            return result
        base.refine()
    raise AssertionError("unreachable")


def _monic_pass(base: AlgebraicBase, height: int, max_states: int, jobs: int):
    moduli = base.conjugate_moduli()
    expanding = [k for k, (lo, _hi) in enumerate(moduli) if lo > 1]
    bound_hi = {}
    bound_lo = {}
    for k in expanding:
        lo, hi = moduli[k]
        bound_hi[k] = (Fraction(height) / (lo - 1)) ** 2
        bound_lo[k] = (Fraction(height) / (hi - 1)) ** 2

    table = base._store.power_boxes(base.degree)

    def sigma_abs_sq(coords, k) -> Interval:
        acc = Box.point(0)
        for i, c in enumerate(coords):
            if c:
                acc = acc + table[k][i].scale(c)
        return acc.abs_sq()

    def children(y):
        """Deterministic list of (digit, child, fuzzy) kept from y."""
        base_z = base.mul_alpha(y)
        kept = []
        for d in range(-height, height + 1):
            z = base.add_int(base_z, d)
            fuzzy = False
            keep = True
            for k in expanding:
                box = sigma_abs_sq(z, k)
                if box.lo > bound_hi[k]:
                    keep = False
                    break
                if box.hi > bound_lo[k]:
                    fuzzy = True
            if keep:
                kept.append((d, z, fuzzy))
        return kept

    zero = base.zero
    level = {zero: 1}
    frontier = [zero]
    transitions = {}
    any_fuzzy = False
    depth = 1
    while frontier:
        depth += 1
        if jobs > 1 and len(frontier) > 32:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                per_state = list(pool.map(children, frontier))
        else:
            per_state = [children(y) for y in frontier]
        nxt = []
        for y, kept in zip(frontier, per_state):
            for d, z, fuzzy in kept:
                any_fuzzy = any_fuzzy or fuzzy
                transitions[(y, d)] = z
                if z not in level:
                    if len(level) >= max_states:
                        raise ResourceCapError(
                            f"state cap {max_states} exceeded at height "
                            f"{height}")
                    level[z] = depth
                    nxt.append(z)
        frontier = nxt
    states = tuple(sorted(level))
    return (states, transitions, level), not any_fuzzy


@dataclass(frozen=True)
class MinHeightReport:
    h_star: int
    word: tuple               # shortest witness, most significant first
    witness: IntPolynomial    # the same word as a polynomial vanishing at alpha
    value_check: bool
    searched: tuple           # (H, nontrivial trimmed edge count) per height


def min_height(base, h_max: int | None = None, *,
               max_states: int = DEFAULT_MAX_STATES,
               jobs: int = 1) -> MinHeightReport:
    """The least H for which some nonzero digit word over {-H..H}
    evaluates to 0 at the base, with a shortest witness.

    The minimal polynomial itself gives a zero word of height equal to
    its largest coefficient, so the default search cap is exactly that
    height and the search always succeeds there.  An explicit h_max
    below the true minimum raises ResourceCapError."""
    base = _coerce(base)
    cap = base.min_poly.height() if h_max is None else h_max
    searched = []
    for h in range(1, cap + 1):
        auto = build_zero_automaton(base, h, max_states=max_states,
                                    jobs=jobs).trim()
        nontrivial = sum(1 for (_y, d) in auto.transitions if d != 0)
        searched.append((h, nontrivial))
        if nontrivial:
            found = auto.shortest_nonzero_word()
            if found is None or not found.value_check:
                raise AssertionError("trim automaton lost its witness")
            witness = IntPolynomial(tuple(reversed(found.word)))
            return MinHeightReport(h, found.word, witness,
                                   found.value_check, tuple(searched))
    raise ResourceCapError(
        f"height cap {cap} exhausted: no nonzero digit word over "
        f"{{-{cap}..{cap}}} evaluates to 0")
