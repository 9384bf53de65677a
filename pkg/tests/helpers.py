"""Shared builders for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from polymon import Alphabet, Element, zero


def words_st(lam: int, max_len: int = 4):
    return st.lists(st.integers(0, lam - 1), max_size=max_len).map(tuple)


def elements_st(lam: int = 2, max_len: int = 4, zero_ok: bool = True):
    ab = Alphabet(lam)
    pairs = st.builds(lambda u, v: Element(ab, u, v), words_st(lam, max_len), words_st(lam, max_len))
    if zero_ok:
        return st.one_of(st.just(zero(ab)), pairs)
    return pairs


def random_element(rng: random.Random, ab: Alphabet, lam: int, max_len: int = 4, zero_rate: float = 0.05) -> Element:
    if rng.random() < zero_rate:
        return zero(ab)
    u = tuple(rng.randrange(lam) for _ in range(rng.randint(0, max_len)))
    v = tuple(rng.randrange(lam) for _ in range(rng.randint(0, max_len)))
    return Element(ab, u, v)
