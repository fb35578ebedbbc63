"""Core value types for the partic algebra.

Everything here is an immutable value: words in the generators a_1..a_{N-1},
multidegrees (occurrence counts of each generator), normal monomials in
exponent form, and finite linear combinations with exact rational
coefficients.  Index 0 is reserved for the affine variant (``partic.affine``)
and never appears in classical words.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

MIN_RANK = 3

Scalar = int | Fraction


def check_rank(n: int) -> int:
    if not isinstance(n, int) or n < MIN_RANK:
        raise ValueError(f"rank must be an integer >= {MIN_RANK}, got {n!r}")
    return n


def parse_ints(text: str) -> tuple[int, ...]:
    """Parse comma- or whitespace-separated integers ('' gives the empty tuple)."""
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"cannot parse integer sequence from {text!r}") from None


@dataclass(frozen=True, order=True)
class Word:
    """A raw monomial in the free algebra: a finite sequence of generator indices.

    The written order is the product order: ``Word(5, (4, 3, 2, 1, 2))`` is
    a_4 a_3 a_2 a_1 a_2.  The empty word is the unit.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if not 1 <= a <= self.n - 1:
                raise ValueError(f"letter {a} out of range 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def concat(self, other: Word) -> Word:
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Word(self.n, self.letters + other.letters)

    @staticmethod
    def parse(n: int, text: str) -> Word:
        return Word(n, parse_ints(text))

    def to_json(self) -> dict:
        return {"N": self.n, "letters": list(self.letters)}

    @staticmethod
    def from_json(obj: Mapping) -> Word:
        return Word(int(obj["N"]), tuple(int(a) for a in obj["letters"]))

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)


@dataclass(frozen=True, order=True)
class MultiDegree:
    """Occurrence counts of each generator: counts[i-1] counts a_i.

    Every defining relation permutes letters, so the multidegree of a word
    is invariant under rewriting; it is the natural grading.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) < MIN_RANK - 1:
            raise ValueError("a multidegree needs at least 2 components (rank >= 3)")
        if any(c < 0 for c in self.counts):
            raise ValueError("multidegree components must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.counts) + 1

    def total(self) -> int:
        return sum(self.counts)

    def bump(self, i: int) -> MultiDegree:
        """The degree with one extra occurrence of a_i."""
        if not 1 <= i <= len(self.counts):
            raise ValueError(f"generator index {i} out of range")
        c = list(self.counts)
        c[i - 1] += 1
        return MultiDegree(tuple(c))

    @staticmethod
    def zero(n: int) -> MultiDegree:
        check_rank(n)
        return MultiDegree((0,) * (n - 1))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)


def multidegree(w: Word) -> MultiDegree:
    counts = [0] * (w.n - 1)
    for a in w.letters:
        counts[a - 1] += 1
    return MultiDegree(tuple(counts))


def multidegrees_up_to(n: int, max_total: int) -> list[MultiDegree]:
    """All multidegrees of rank n with total <= max_total, by total then lex."""
    check_rank(n)
    combos = [c for c in product(range(max_total + 1), repeat=n - 1) if sum(c) <= max_total]
    combos.sort(key=lambda c: (sum(c), c))
    return [MultiDegree(c) for c in combos]


def normal_condition(d: Iterable[int], k: Iterable[int]) -> bool:
    """Exponent condition for normal monomials: d_2 <= k_1 and d_i <= d_{i-1} + k_{i-1}.

    ``d`` lists exponents for generators 2..N-1, ``k`` for 1..N-1.
    """
    d = tuple(d)
    k = tuple(k)
    if len(k) != len(d) + 1:
        return False
    if any(x < 0 for x in d) or any(x < 0 for x in k):
        return False
    if d and d[0] > k[0]:
        return False
    for j in range(1, len(d)):
        # d_{j+2} <= d_{j+1} + k_{j+1}
        if d[j] > d[j - 1] + k[j]:
            return False
    return True


@dataclass(frozen=True, order=True)
class NormalMonomial:
    """Basis monomial a_{N-1}^{d_{N-1}} .. a_2^{d_2} a_1^{k_1} a_2^{k_2} .. a_{N-1}^{k_{N-1}}.

    ``d`` is indexed by generators 2..N-1 (there is no d_1 slot; operations
    use the convention d_1 = 0) and ``k`` by generators 1..N-1.  The tuple
    ordering (d, k) is the canonical term order.
    """

    n: int
    d: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        check_rank(self.n)
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "k", tuple(self.k))
        if len(self.d) != self.n - 2 or len(self.k) != self.n - 1:
            raise ValueError(
                f"rank {self.n} needs {self.n - 2} descending and {self.n - 1} ascending exponents"
            )
        if not normal_condition(self.d, self.k):
            raise ValueError(f"exponents violate the normal-form condition: d={self.d} k={self.k}")

    @staticmethod
    def unit(n: int) -> NormalMonomial:
        check_rank(n)
        return NormalMonomial(n, (0,) * (n - 2), (0,) * (n - 1))

    def is_unit(self) -> bool:
        return not any(self.d) and not any(self.k)

    def d_exp(self, i: int) -> int:
        """Descending exponent of a_i, with d_1 = 0 by convention."""
        if i == 1:
            return 0
        return self.d[i - 2]

    def k_exp(self, i: int) -> int:
        return self.k[i - 1]

    def length(self) -> int:
        return sum(self.d) + sum(self.k)

    def degree(self) -> MultiDegree:
        counts = list(self.k)
        for i in range(2, self.n):
            counts[i - 1] += self.d[i - 2]
        return MultiDegree(tuple(counts))

    def to_json(self) -> dict:
        return {"N": self.n, "d": list(self.d), "k": list(self.k)}

    @staticmethod
    def from_json(obj: Mapping) -> NormalMonomial:
        return NormalMonomial(
            int(obj["N"]),
            tuple(int(x) for x in obj["d"]),
            tuple(int(x) for x in obj["k"]),
        )

    def __str__(self) -> str:
        factors = []
        for i in range(self.n - 1, 1, -1):
            e = self.d[i - 2]
            if e:
                factors.append(f"a{i}" + (f"^{e}" if e > 1 else ""))
        for i in range(1, self.n):
            e = self.k[i - 1]
            if e:
                factors.append(f"a{i}" + (f"^{e}" if e > 1 else ""))
        return " ".join(factors) if factors else "1"


def nm_to_word(m: NormalMonomial) -> Word:
    """Expand a normal monomial to its defining word (descending then ascending)."""
    letters: list[int] = []
    for i in range(m.n - 1, 1, -1):
        letters.extend([i] * m.d[i - 2])
    for i in range(1, m.n):
        letters.extend([i] * m.k[i - 1])
    return Word(m.n, tuple(letters))


class LinearCombination:
    """Finite formal sum with exact rational coefficients.

    Zero coefficients are never stored, so equality is term-set equality and
    is independent of insertion order.  Subclasses fix the key type.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | Iterable[tuple] = ()) -> None:
        check_rank(n)
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, coeff in items:
            self._check_key(key)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self.terms = {key: c for key, c in acc.items() if c != 0}

    def _check_key(self, key) -> None:
        raise NotImplementedError

    def _make(self, terms) -> LinearCombination:
        return type(self)(self.n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and other.n == self.n
            and other.terms == self.terms
        )

    __hash__ = None

    def __add__(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise ValueError("can only add elements of the same kind and rank")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return self._make(out)

    def __neg__(self):
        return self._make({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c: Scalar):
        c = Fraction(c)
        if not c:
            return self._make({})
        return self._make({key: c * v for key, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_terms():
            if coeff == 1:
                parts.append(str(key))
            elif coeff == -1:
                parts.append(f"-{key}")
            else:
                parts.append(f"{coeff}*{key}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, {self.pretty()})"


class AlgebraElement(LinearCombination):
    """Linear combination of normal monomials of one rank."""

    def _check_key(self, key) -> None:
        if not isinstance(key, NormalMonomial) or key.n != self.n:
            raise ValueError(f"term keys must be NormalMonomial of rank {self.n}")

    @staticmethod
    def zero(n: int) -> AlgebraElement:
        return AlgebraElement(n, {})

    @staticmethod
    def one(n: int) -> AlgebraElement:
        return AlgebraElement(n, {NormalMonomial.unit(n): 1})

    @staticmethod
    def from_monomial(m: NormalMonomial, coeff: Scalar = 1) -> AlgebraElement:
        return AlgebraElement(m.n, {m: coeff})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            from .normal_form import element_product

            return element_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented
