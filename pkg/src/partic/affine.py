"""Desk-scale checks for the affine variant.

Generators a_0, ..., a_{N-1} have indices read modulo N and act on particle
configurations on a circle with N positions; a_0 moves a particle from
position N back to position 1 and bumps a wraparound marker exponent t.

Verification runs over start configurations with t = 0 only: the action
commutes with shifting t (t never influences which moves are possible), so
nothing is lost.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .core import check_rank
from .particles import ANNIHILATED


@dataclass(frozen=True, order=True)
class AffineWord:
    """Word in the cyclic generators, letters in 0..N-1."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if not 0 <= a <= self.n - 1:
                raise ValueError(f"letter {a} out of range 0..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)


@dataclass(frozen=True, order=True)
class AffineConfiguration:
    """Counts (k_1, ..., k_N) on the circle plus the wraparound exponent t."""

    n: int
    occ: tuple[int, ...]
    t: int = 0

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "occ", tuple(self.occ))
        if len(self.occ) != self.n:
            raise ValueError(f"rank {self.n} needs {self.n} counts")
        if any(c < 0 for c in self.occ) or self.t < 0:
            raise ValueError("counts and the wraparound exponent must be nonnegative")

    def total(self) -> int:
        return sum(self.occ)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.occ) + f" t={self.t}"


def affine_act_gen(i: int, c: AffineConfiguration):
    """Move one particle i -> i+1 cyclically; a_0 moves N -> 1 and bumps t."""
    if not 0 <= i <= c.n - 1:
        raise ValueError(f"generator index {i} out of range 0..{c.n - 1}")
    src = c.n - 1 if i == 0 else i - 1
    dst = 0 if i == 0 else i
    if c.occ[src] == 0:
        return ANNIHILATED
    occ = list(c.occ)
    occ[src] -= 1
    occ[dst] += 1
    return AffineConfiguration(c.n, tuple(occ), c.t + (1 if i == 0 else 0))


def affine_act_word(w: AffineWord, c: AffineConfiguration):
    """Apply a word, rightmost letter first; annihilation absorbs."""
    if w.n != c.n:
        raise ValueError("rank mismatch")
    cur = c
    for a in reversed(w.letters):
        cur = affine_act_gen(a, cur)
        if cur is ANNIHILATED:
            return ANNIHILATED
    return cur


def affine_configurations(n: int, max_total: int) -> Iterator[AffineConfiguration]:
    """All t = 0 configurations with at most ``max_total`` particles, lexicographic."""
    check_rank(n)
    occ = [0] * n

    def rec(idx: int, budget: int) -> Iterator[tuple[int, ...]]:
        if idx == n:
            yield tuple(occ)
            return
        for c in range(budget + 1):
            occ[idx] = c
            yield from rec(idx + 1, budget - c)
        occ[idx] = 0

    for body in rec(0, max_total):
        yield AffineConfiguration(n, body, 0)


def affine_relation_instances(n: int, m_max: int, k_max: int) -> list[tuple[AffineWord, AffineWord]]:
    """Concrete instances of the cyclic relation families.

    Emitted groups, all indices modulo N: distant commutation, the two
    three-letter bump rules, the four-letter exchange rule, and the two
    parametrized families with outer exponents m, m' <= m_max and a full
    cyclic middle block a_{i+1}^{k_{i+1}} ... a_{i-2}^{k_{i-2}} with every
    k_j <= k_max.  Degenerate parameter choices are kept.

    The exchange rule needs the outer neighbours i-1 and i+1 of its pivot to
    commute; on a circle with only 3 positions they are adjacent and the rule
    fails on the module (witness: a_0 a_2 a_1 a_0 vs a_1 a_0 a_2 a_0 on one
    particle at position 3), so that family is emitted for N >= 4 only.
    """
    check_rank(n)
    if m_max < 0 or k_max < 0:
        raise ValueError("bounds must be nonnegative")
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    # distant commutation: a_i a_j = a_j a_i for i - j != +-1 mod N
    for i in range(n):
        for j in range(i + 1, n):
            if (j - i) % n not in (1, n - 1):
                pairs.append(((i, j), (j, i)))
    # a_i a_{i-1} a_i = a_i a_i a_{i-1}
    for i in range(n):
        im1 = (i - 1) % n
        pairs.append(((i, im1, i), (i, i, im1)))
    # a_i a_{i+1} a_i = a_{i+1} a_i a_i
    for i in range(n):
        ip1 = (i + 1) % n
        pairs.append(((i, ip1, i), (ip1, i, i)))
    # a_i a_{i-1} a_{i+1} a_i = a_{i+1} a_i a_{i-1} a_i; needs a_{i-1}, a_{i+1}
    # non-adjacent, which fails on a 3-cycle
    if n >= 4:
        for i in range(n):
            im1, ip1 = (i - 1) % n, (i + 1) % n
            pairs.append(((i, im1, ip1, i), (ip1, i, im1, i)))
    # the two parametrized families
    for i in range(n):
        im1 = (i - 1) % n
        middle_positions = [(i + s) % n for s in range(1, n - 1)]
        for m in range(m_max + 1):
            for mp in range(m_max + 1):
                for ks in product(range(k_max + 1), repeat=n - 2):
                    mid = tuple(p for p, e in zip(middle_positions, ks) for _ in range(e))
                    head = (i,) * m
                    tail = (im1,) * m
                    pairs.append(((im1,) * mp + head + mid + tail, head + (im1,) * mp + mid + tail))
                    pairs.append((head + mid + tail + (i,) * mp, head + mid + (i,) * mp + tail))
    seen: set[tuple] = set()
    out: list[tuple[AffineWord, AffineWord]] = []
    for lhs, rhs in pairs:
        if (lhs, rhs) in seen:
            continue
        seen.add((lhs, rhs))
        out.append((AffineWord(n, lhs), AffineWord(n, rhs)))
    return out


def find_relation_counterexample(lhs: AffineWord, rhs: AffineWord, max_particles: int):
    """First t = 0 configuration (total <= bound) where the two words act differently."""
    if lhs.n != rhs.n:
        raise ValueError("rank mismatch")
    for c in affine_configurations(lhs.n, max_particles):
        a = affine_act_word(lhs, c)
        b = affine_act_word(rhs, c)
        if a != b:
            return c
    return None


def verify_relation_on_module(lhs: AffineWord, rhs: AffineWord, max_particles: int) -> bool:
    """True iff both words act identically (including annihilation and t)."""
    return find_relation_counterexample(lhs, rhs, max_particles) is None
