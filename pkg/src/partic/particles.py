"""The bosonic particle-configuration module and its monomial labelling.

A configuration holds particle counts at the line positions 1..N-1 plus a
deposit (position 0) which is written LAST, both in tuples and in the text
format: ``"3,0,0,1,0,1,2,0,1"`` at N = 9 has one particle in the deposit.
The generator a_i moves one particle from position i to position i+1, where
"position N" means the deposit; with no particle at i the result is
annihilated.

Action order: a word acts with its RIGHTMOST letter first, i.e. the word
(6, 5, 4) is the operator composition a6 after a5 after a4, so a4 moves
first.  Using the opposite order silently breaks every worked example in
the tests, so it is pinned there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import (
    AlgebraElement,
    LinearCombination,
    NormalMonomial,
    Word,
    check_rank,
    multidegrees_up_to,
    nm_to_word,
    parse_ints,
)
from .normal_form import enumerate_basis, left_mul_gen, right_mul_gen


class _AnnihilatedType:
    """Marker for a generator move with no particle to move.

    Distinct from the zero module element: single-configuration operations
    stay total, and the lift to linear combinations maps it to zero.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "ANNIHILATED"


ANNIHILATED = _AnnihilatedType()


@dataclass(frozen=True, order=True)
class Configuration:
    """Particle counts (k_1, ..., k_{N-1}, k_0), deposit last."""

    n: int
    occ: tuple[int, ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "occ", tuple(self.occ))
        if len(self.occ) != self.n:
            raise ValueError(f"rank {self.n} needs {self.n} counts (deposit last)")
        if any(c < 0 for c in self.occ):
            raise ValueError("particle counts must be nonnegative")

    @staticmethod
    def zero(n: int) -> Configuration:
        return Configuration(n, (0,) * n)

    def total(self) -> int:
        return sum(self.occ)

    def at(self, i: int) -> int:
        """Count at line position i (1 <= i <= N-1)."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"position {i} out of range 1..{self.n - 1}")
        return self.occ[i - 1]

    @property
    def deposit(self) -> int:
        return self.occ[-1]

    @staticmethod
    def parse(n: int, text: str) -> Configuration:
        return Configuration(n, parse_ints(text))

    def to_json(self) -> dict:
        return {"N": self.n, "config": list(self.occ)}

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.occ)


class ModuleElement(LinearCombination):
    """Linear combination of particle configurations of one rank."""

    def _check_key(self, key) -> None:
        if not isinstance(key, Configuration) or key.n != self.n:
            raise ValueError(f"term keys must be Configuration of rank {self.n}")

    @staticmethod
    def zero(n: int) -> ModuleElement:
        return ModuleElement(n, {})

    @staticmethod
    def from_configuration(c: Configuration, coeff=1) -> ModuleElement:
        return ModuleElement(c.n, {c: coeff})


def act_gen(i: int, c: Configuration):
    """a_i applied to a configuration: move one particle i -> i+1, or annihilate."""
    if not 1 <= i <= c.n - 1:
        raise ValueError(f"generator index {i} out of range 1..{c.n - 1}")
    if c.occ[i - 1] == 0:
        return ANNIHILATED
    occ = list(c.occ)
    occ[i - 1] -= 1
    occ[i] += 1  # the deposit sits right after position N-1, so the move is uniform
    return Configuration(c.n, tuple(occ))


def _act_letters(letters: tuple[int, ...], c: Configuration):
    cur = c.occ
    for a in reversed(letters):  # rightmost letter acts first
        if cur[a - 1] == 0:
            return ANNIHILATED
        lst = list(cur)
        lst[a - 1] -= 1
        lst[a] += 1
        cur = tuple(lst)
    return Configuration(c.n, cur)


def act_word(w: Word, c: Configuration):
    """Apply a word, rightmost letter first; annihilation absorbs."""
    if w.n != c.n:
        raise ValueError("rank mismatch")
    return _act_letters(w.letters, c)


def act_element(e: AlgebraElement, v: ModuleElement) -> ModuleElement:
    """Bilinear extension of the word action; annihilated terms drop out."""
    if e.n != v.n:
        raise ValueError("rank mismatch")
    acc: dict[Configuration, Fraction] = {}
    for m, cm in e.terms.items():
        letters = nm_to_word(m).letters
        for cfg, cv in v.terms.items():
            out = _act_letters(letters, cfg)
            if out is ANNIHILATED:
                continue
            acc[out] = acc.get(out, Fraction(0)) + cm * cv
    return ModuleElement(v.n, acc)


def min_input(m: NormalMonomial) -> Configuration:
    """Smallest configuration the monomial does not annihilate: (k_1, ..., k_{N-1}, 0).

    The monomial acts without annihilating on c exactly when c has at least
    k_i particles at every line position i; the deposit is unconstrained.
    """
    return Configuration(m.n, m.k + (0,))


def output_of(m: NormalMonomial) -> Configuration:
    """Image of ``min_input(m)`` under the monomial's action.

    Position 1 empties, position i receives k_{i-1} + d_{i-1} - d_i, and the
    deposit receives k_{N-1} + d_{N-1}.
    """
    n = m.n
    occ = [0] * n
    for i in range(2, n):
        occ[i - 1] = m.k_exp(i - 1) + m.d_exp(i - 1) - m.d_exp(i)
    occ[n - 1] = m.k_exp(n - 1) + m.d_exp(n - 1)
    return Configuration(n, tuple(occ))


@dataclass(frozen=True, order=True)
class IoLabel:
    """(output, minimal input) configuration pair; labels a basis monomial uniquely."""

    i_out: Configuration
    j_in: Configuration

    def __post_init__(self) -> None:
        if self.i_out.n != self.j_in.n:
            raise ValueError("label configurations must share the rank")
        if self.j_in.deposit != 0:
            raise ValueError("unrealizable label: input configuration has deposit particles")
        if self.i_out.at(1) != 0:
            raise ValueError("unrealizable label: output configuration occupies position 1")
        if self.i_out.total() != self.j_in.total():
            raise ValueError("unrealizable label: particle counts differ")


def io_label(m: NormalMonomial) -> IoLabel:
    return IoLabel(output_of(m), min_input(m))


def monomial_from_io(label: IoLabel) -> NormalMonomial:
    """Invert :func:`io_label`; raises ValueError on labels no monomial produces."""
    n = label.j_in.n
    k = label.j_in.occ[:-1]
    d: list[int] = []
    prev = 0
    for i in range(2, n):
        di = k[i - 2] + prev - label.i_out.occ[i - 1]
        if di < 0:
            raise ValueError(f"unrealizable label: negative descending exponent at a_{i}")
        d.append(di)
        prev = di
    if label.i_out.deposit != k[-1] + prev:
        raise ValueError("unrealizable label: deposit count mismatch")
    return NormalMonomial(n, tuple(d), k)


def _pos_index(n: int, pos: int) -> int:
    # positions are 1..N-1 and 0 (deposit, stored last)
    return n - 1 if pos == 0 else pos - 1


def _shift(c: Configuration, pos: int, delta: int) -> Configuration:
    occ = list(c.occ)
    occ[_pos_index(c.n, pos)] += delta
    return Configuration(c.n, tuple(occ))


def _occupied(c: Configuration, pos: int) -> bool:
    return c.occ[_pos_index(c.n, pos)] > 0


def label_mul(label: IoLabel, i: int, side: str) -> IoLabel:
    """Multiply the labelled monomial by a_i on the given side, on labels only.

    Position arithmetic mirrors the particle moves: the spot after i is i+1,
    and after N-1 comes the deposit.  Agrees with multiplying the underlying
    monomial and relabelling.
    """
    n = label.j_in.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    nxt = 0 if i == n - 1 else i + 1
    out, inp = label.i_out, label.j_in
    if side == "left":
        if _occupied(out, i):
            return IoLabel(_shift(_shift(out, i, -1), nxt, +1), inp)
        return IoLabel(_shift(out, nxt, +1), _shift(inp, i, +1))
    if side == "right":
        if nxt != 0 and _occupied(inp, nxt):
            return IoLabel(out, _shift(_shift(inp, nxt, -1), i, +1))
        return IoLabel(_shift(out, nxt, +1), _shift(inp, i, +1))
    raise ValueError("side must be 'left' or 'right'")


def label_mul_via_monomial(label: IoLabel, i: int, side: str) -> IoLabel:
    """Reference route for label_mul: unlabel, multiply, relabel."""
    m = monomial_from_io(label)
    m2 = left_mul_gen(i, m) if side == "left" else right_mul_gen(m, i)
    return io_label(m2)


def faithfulness_check(n: int, max_len: int) -> bool:
    """Labels are pairwise distinct over all basis monomials of length <= max_len."""
    check_rank(n)
    seen: dict[IoLabel, NormalMonomial] = {}
    for delta in multidegrees_up_to(n, max_len):
        for m in enumerate_basis(delta):
            lab = io_label(m)
            if seen.setdefault(lab, m) != m:
                return False
    return True


def configurations(n: int, max_particles: int, max_deposit: int | None = None) -> Iterator[Configuration]:
    """All configurations with at most ``max_particles`` on positions 1..N-1.

    The deposit ranges over 0..max_deposit (default: max_particles).
    Deterministic lexicographic order.
    """
    check_rank(n)
    if max_deposit is None:
        max_deposit = max_particles
    positions = n - 1
    occ = [0] * positions

    def rec(idx: int, budget: int) -> Iterator[tuple[int, ...]]:
        if idx == positions:
            yield tuple(occ)
            return
        for c in range(budget + 1):
            occ[idx] = c
            yield from rec(idx + 1, budget - c)
        occ[idx] = 0

    for body in rec(0, max_particles):
        for dep in range(max_deposit + 1):
            yield Configuration(n, body + (dep,))
