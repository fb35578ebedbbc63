"""Brute-force rewriting oracle over the free monoid.

Every defining relation permutes the letters of a word, so each congruence
class sits inside the finite set of words with one multidegree and can be
closed off by plain breadth-first search.  No term orders, no completion.

This module is deliberately independent of the normal-form code in
``partic.normal_form``; the two certify each other.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator

from .core import MultiDegree, Word, check_rank, multidegree

PLACTIC = "plactic"
PARTIC = "partic"

Letters = tuple[int, ...]


@dataclass(frozen=True)
class RewriteRule:
    """An unoriented rule lhs = rhs between two concrete words."""

    lhs: Letters
    rhs: Letters

    def __post_init__(self) -> None:
        if Counter(self.lhs) != Counter(self.rhs):
            raise ValueError("a rewrite rule must preserve the multidegree")


@dataclass(frozen=True)
class RelationSet:
    """Concrete rule instances for one rank (no patterns at rewrite time)."""

    name: str
    n: int
    rules: tuple[RewriteRule, ...]

    def oriented(self) -> list[tuple[Letters, Letters]]:
        pairs: list[tuple[Letters, Letters]] = []
        for r in self.rules:
            pairs.append((r.lhs, r.rhs))
            pairs.append((r.rhs, r.lhs))
        return pairs


def plactic_rules(n: int) -> RelationSet:
    check_rank(n)
    rules = []
    # a_i a_{i-1} a_i = a_i a_i a_{i-1}
    for i in range(2, n):
        rules.append(RewriteRule((i, i - 1, i), (i, i, i - 1)))
    # a_i a_{i+1} a_i = a_{i+1} a_i a_i
    for i in range(1, n - 1):
        rules.append(RewriteRule((i, i + 1, i), (i + 1, i, i)))
    # distant generators commute
    for i in range(1, n):
        for j in range(i + 2, n):
            rules.append(RewriteRule((i, j), (j, i)))
    return RelationSet(PLACTIC, n, tuple(rules))


def partic_rules(n: int) -> RelationSet:
    # the extra exchange rule a_i a_{i-1} a_{i+1} a_i = a_{i+1} a_i a_{i-1} a_i
    base = plactic_rules(n).rules
    extra = tuple(
        RewriteRule((i, i - 1, i + 1, i), (i + 1, i, i - 1, i)) for i in range(2, n - 1)
    )
    return RelationSet(PARTIC, n, base + extra)


def relation_set(name: str, n: int) -> RelationSet:
    if name == PLACTIC:
        return plactic_rules(n)
    if name == PARTIC:
        return partic_rules(n)
    raise ValueError(f"unknown relation set {name!r} (expected {PLACTIC!r} or {PARTIC!r})")


def _steps(letters: Letters, pairs: list[tuple[Letters, Letters]]) -> Iterator[Letters]:
    for lhs, rhs in pairs:
        span = len(lhs)
        for p in range(len(letters) - span + 1):
            if letters[p : p + span] == lhs:
                yield letters[:p] + rhs + letters[p + span :]


def _closure(start: Letters, pairs: list[tuple[Letters, Letters]]) -> set[Letters]:
    seen = {start}
    queue = deque((start,))
    while queue:
        cur = queue.popleft()
        for nxt in _steps(cur, pairs):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _check_ranks(w: Word, rs: RelationSet) -> None:
    if w.n != rs.n:
        raise ValueError(f"word rank {w.n} does not match relation set rank {rs.n}")


def one_step_rewrites(w: Word, rs: RelationSet) -> set[Word]:
    """All words reachable by one rule application, in either direction."""
    _check_ranks(w, rs)
    return {Word(w.n, out) for out in _steps(w.letters, rs.oriented())}


def congruence_class(w: Word, rs: RelationSet) -> set[Word]:
    """The full (finite) equivalence class of w under the given relations."""
    _check_ranks(w, rs)
    return {Word(w.n, t) for t in _closure(w.letters, rs.oriented())}


def words_equivalent(w1: Word, w2: Word, rs: RelationSet) -> bool:
    _check_ranks(w1, rs)
    _check_ranks(w2, rs)
    if w1.letters == w2.letters:
        return True
    if multidegree(w1) != multidegree(w2):
        return False
    target = w2.letters
    pairs = rs.oriented()
    seen = {w1.letters}
    queue = deque((w1.letters,))
    while queue:
        cur = queue.popleft()
        for nxt in _steps(cur, pairs):
            if nxt == target:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def words_with_degree(delta: MultiDegree) -> Iterator[Letters]:
    """All words with the given multidegree, in lexicographic order."""
    n = delta.n
    total = delta.total()
    counts = list(delta.counts)
    word: list[int] = []

    def rec() -> Iterator[Letters]:
        if len(word) == total:
            yield tuple(word)
            return
        for a in range(1, n):
            if counts[a - 1]:
                counts[a - 1] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                counts[a - 1] += 1

    yield from rec()


def congruence_partition(delta: MultiDegree, rs: RelationSet) -> list[set[Letters]]:
    """Partition of all words of one multidegree into congruence classes.

    Classes appear in order of their lexicographically smallest member.
    """
    if delta.n != rs.n:
        raise ValueError("multidegree rank does not match relation set rank")
    pairs = rs.oriented()
    seen: set[Letters] = set()
    classes: list[set[Letters]] = []
    for letters in words_with_degree(delta):
        if letters in seen:
            continue
        cls = _closure(letters, pairs)
        seen |= cls
        classes.append(cls)
    return classes


def count_classes(delta: MultiDegree, rs: RelationSet) -> int:
    """Number of congruence classes among all words of one multidegree."""
    return len(congruence_partition(delta, rs))
