"""Free-word rewriting: the independent route to every product.

Words over the doubled alphabet {x, x'} are encoded as tuples of signed
ints: letter i reads as i+1 when positive and -(i+1) when inverted.
The only redexes are (positive, inverted) adjacencies:

    x x'  ->  deleted        (same letter)
    x y'  ->  whole word is Zero   (different letters)

An (inverted, positive) junction like a' a is inert; that is exactly why
irreducible words have the shape inverted* positive* and denote normal
forms u'v, with u read in reverse from the inverted prefix.  ``reduce``
is a single left-to-right stack pass; ``reduce_stepwise`` applies one
redex at a time under a chosen strategy so tests can compare leftmost
against rightmost and confirm the result is strategy-independent.

``collapse_witness`` searches the congruence generated by one pair for a
derivation of (0, 1): identifying any two distinct elements collapses
the whole monoid.  Not finding one within the depth budget is a legal
outcome, reported as None, never as an error.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import Alphabet, Element, elements_of_size, one, zero
from .errors import AlphabetMismatch, EqualPair, UnknownLetter, ZeroArgument

FreeWord = Tuple[int, ...]

SEED = "seed"
LEFT_MULTIPLY = "left-multiply"
RIGHT_MULTIPLY = "right-multiply"
SYMMETRY = "symmetry"
TRANSITIVITY = "transitivity"


def signed(letter: int, inverted: bool = False) -> int:
    """Encode one signed letter."""
    if letter < 0:
        raise UnknownLetter(f"letter index {letter} is negative")
    return -(letter + 1) if inverted else letter + 1


def letter_of(s: int) -> int:
    return abs(s) - 1


def is_inverted(s: int) -> bool:
    return s < 0


def free_word(x: Element) -> FreeWord:
    """Signed-letter string of a nonzero element: u reversed-inverted, then v."""
    if x.u is None or x.v is None:
        raise ZeroArgument("zero has no free-word form")
    return tuple(-(i + 1) for i in reversed(x.u)) + tuple(i + 1 for i in x.v)


def _checked(alphabet: Alphabet, word: Iterable[int]) -> List[int]:
    w = list(word)
    for s in w:
        if s == 0 or letter_of(s) not in alphabet:
            raise UnknownLetter(f"signed letter {s} invalid for alphabet of size {alphabet.size}")
    return w


def _residue(alphabet: Alphabet, seq: Sequence[int]) -> Element:
    # seq must already have the irreducible shape inverted* positive*
    k = 0
    while k < len(seq) and seq[k] < 0:
        k += 1
    u = tuple(-s - 1 for s in reversed(seq[:k]))
    v = tuple(s - 1 for s in seq[k:])
    assert all(s > 0 for s in seq[k:]), "residue not in inverted*positive* shape"
    return Element(alphabet, u, v)


def reduce(alphabet: Alphabet, word: Iterable[int]) -> Element:
    """Rewrite a signed word to Zero or its normal form (stack pass)."""
    stack: List[int] = []
    for s in _checked(alphabet, word):
        if s < 0 and stack and stack[-1] > 0:
            if stack[-1] == -s:
                stack.pop()
            else:
                return zero(alphabet)
        else:
            stack.append(s)
    return _residue(alphabet, stack)


def reduce_stepwise(alphabet: Alphabet, word: Iterable[int], strategy: str = "leftmost") -> Element:
    """One redex at a time; strategy picks the leftmost or rightmost one.

    Exists to audit ``reduce``: the result never depends on the strategy,
    and the test suite verifies that exhaustively on short words.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    w = _checked(alphabet, word)
    while True:
        positions: Iterable[int] = range(len(w) - 1)
        if strategy == "rightmost":
            positions = reversed(range(len(w) - 1))
        for i in positions:
            if w[i] > 0 and w[i + 1] < 0:
                if w[i] == -w[i + 1]:
                    del w[i:i + 2]
                    break
                return zero(alphabet)
        else:
            return _residue(alphabet, w)


def mul_oracle(x: Element, y: Element) -> Element:
    """Product recomputed from scratch by rewriting; never consults the
    closed form in ``Element.__mul__``."""
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"{x.alphabet} vs {y.alphabet}")
    if x.is_zero or y.is_zero:
        return zero(x.alphabet)
    return reduce(x.alphabet, free_word(x) + free_word(y))


# -- congruence collapse ------------------------------------------------


@dataclass(frozen=True)
class DerivationStep:
    """One congruence consequence and the rule that produced it."""

    rule: str
    pair: Tuple[Element, Element]
    by: Optional[Element] = None          # multiplier for left/right-multiply
    sources: Optional[Tuple[int, int]] = None  # step indices for transitivity

    def to_json(self) -> dict:
        out: dict = {"rule": self.rule, "pair": [self.pair[0].to_json(), self.pair[1].to_json()]}
        if self.by is not None:
            out["by"] = self.by.to_json()
        if self.sources is not None:
            out["sources"] = list(self.sources)
        return out


@dataclass(frozen=True)
class Derivation:
    """Chain of pairs from a seed identification down to (0, 1)."""

    steps: Tuple[DerivationStep, ...]

    @property
    def final_pair(self) -> Tuple[Element, Element]:
        return self.steps[-1].pair

    @property
    def depth(self) -> int:
        """Steps after the seed."""
        return len(self.steps) - 1

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps]}


def verify_derivation(d: Derivation, seed: Optional[Tuple[Element, Element]] = None) -> None:
    """Replay a derivation with the closed-form product; raise ValueError
    on the first step that does not follow from its rule."""
    if not d.steps:
        raise ValueError("empty derivation")
    first = d.steps[0]
    if first.rule != SEED:
        raise ValueError(f"step 0 must be the seed, got {first.rule}")
    if seed is not None and first.pair != seed:
        raise ValueError(f"seed pair {first.pair} differs from expected {seed}")
    for i in range(1, len(d.steps)):
        step = d.steps[i]
        px, py = d.steps[i - 1].pair
        if step.rule == LEFT_MULTIPLY:
            if step.by is None or step.pair != (step.by * px, step.by * py):
                raise ValueError(f"step {i}: left-multiply does not replay")
        elif step.rule == RIGHT_MULTIPLY:
            if step.by is None or step.pair != (px * step.by, py * step.by):
                raise ValueError(f"step {i}: right-multiply does not replay")
        elif step.rule == SYMMETRY:
            if step.pair != (py, px):
                raise ValueError(f"step {i}: symmetry does not replay")
        elif step.rule == TRANSITIVITY:
            if step.sources is None:
                raise ValueError(f"step {i}: transitivity needs sources")
            j, k = step.sources
            if not (0 <= j < i and 0 <= k < i):
                raise ValueError(f"step {i}: transitivity sources out of range")
            xj, yj = d.steps[j].pair
            xk, yk = d.steps[k].pair
            if yj != xk or step.pair != (xj, yk):
                raise ValueError(f"step {i}: transitivity does not replay")
        else:
            raise ValueError(f"step {i}: unknown rule {step.rule!r}")
    ab = d.steps[0].pair[0].alphabet
    if d.final_pair != (zero(ab), one(ab)):
        raise ValueError("derivation does not end at (0, 1)")


def multiplier_pool(a: Element, b: Element) -> List[Element]:
    """Ball of radius 2 over the letters occurring in a, b plus one fresh
    letter (the smallest non-occurring index, when the alphabet has one),
    in enumeration order with Zero first."""
    ab = a.alphabet
    occurring = set(a.letters() | b.letters())
    fresh = 0
    while fresh in occurring:
        fresh += 1
    if fresh in ab:
        occurring.add(fresh)
    letters = sorted(occurring)
    pool = [zero(ab), one(ab)]
    for total in (1, 2):
        pool.extend(elements_of_size(ab, letters, total))
    return pool


def collapse_witness(a: Element, b: Element, max_depth: int = 8) -> Optional[Derivation]:
    """Search the congruence generated by identifying a with b for a
    derivation of (0, 1); None when none exists within max_depth.

    Breadth-first over ordered pairs.  Moves from (x, y), in order: left
    multiplication by each pool element, right multiplication by each,
    then symmetry.  Queue and pool order are fixed, so the derivation
    found for given inputs is reproducible.  Diagonal pairs are pruned:
    every move sends (x, x) to another diagonal pair, which can never
    become (0, 1).
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {b.alphabet}")
    if a == b:
        raise EqualPair(f"seed must identify two distinct elements, got {a} twice")
    ab = a.alphabet
    target = (zero(ab), one(ab))
    seed = (a, b)
    if seed == target:
        return Derivation((DerivationStep(SEED, seed),))

    pool = multiplier_pool(a, b)
    lmemo: Dict[Tuple[int, Element], Element] = {}
    rmemo: Dict[Tuple[int, Element], Element] = {}

    def left(mi: int, x: Element) -> Element:
        key = (mi, x)
        r = lmemo.get(key)
        if r is None:
            r = pool[mi] * x
            lmemo[key] = r
        return r

    def right(mi: int, x: Element) -> Element:
        key = (mi, x)
        r = rmemo.get(key)
        if r is None:
            r = x * pool[mi]
            rmemo[key] = r
        return r

    parent: Dict[Tuple[Element, Element], Optional[tuple]] = {seed: None}
    queue: deque = deque([(seed, 0)])
    while queue:
        state, depth = queue.popleft()
        if depth >= max_depth:
            continue
        x, y = state
        moves = [((left(mi, x), left(mi, y)), LEFT_MULTIPLY, pool[mi]) for mi in range(len(pool))]
        moves += [((right(mi, x), right(mi, y)), RIGHT_MULTIPLY, pool[mi]) for mi in range(len(pool))]
        moves.append(((y, x), SYMMETRY, None))
        for nxt, rule, m in moves:
            if nxt[0] == nxt[1] or nxt in parent:
                continue
            parent[nxt] = (state, rule, m)
            if nxt == target:
                return _chain(parent, seed, nxt)
            queue.append((nxt, depth + 1))
    return None


def _chain(parent: dict, seed: Tuple[Element, Element], final: Tuple[Element, Element]) -> Derivation:
    hops = []
    state = final
    while parent[state] is not None:
        prev, rule, m = parent[state]
        hops.append(DerivationStep(rule, state, by=m))
        state = prev
    hops.append(DerivationStep(SEED, seed))
    return Derivation(tuple(reversed(hops)))
