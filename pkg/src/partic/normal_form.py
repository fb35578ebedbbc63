"""Normalization of words to basis monomials, and exact products.

The whole engine is the pair of single-generator multiplication rules below;
normalization and monomial products are folds of them.  Soundness and
completeness against the rewriting oracle are certified by the test suite
and the ``verify`` CLI subcommand.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .core import AlgebraElement, MultiDegree, NormalMonomial, Word, nm_to_word


def _check_gen(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def left_mul_gen(i: int, m: NormalMonomial) -> NormalMonomial:
    """a_i * m, again in normal form.

    If the descending side is saturated (d_i = d_{i-1} + k_{i-1}, with
    d_1 = 0) the new letter passes through and k_i grows; otherwise it stays
    on the descending side and d_i grows.  For i = 1 the first branch always
    applies since there is no d_1 slot.
    """
    _check_gen(i, m.n)
    d = list(m.d)
    k = list(m.k)
    if i == 1 or m.d_exp(i) == m.d_exp(i - 1) + m.k_exp(i - 1):
        k[i - 1] += 1
    else:
        d[i - 2] += 1
    return NormalMonomial(m.n, tuple(d), tuple(k))


def right_mul_gen(m: NormalMonomial, i: int) -> NormalMonomial:
    """m * a_i, again in normal form.

    A pending ascending factor a_{i+1} absorbs the new letter into the
    descending side (d_{i+1} += 1, k_i += 1, k_{i+1} -= 1); with no such
    factor (k_{i+1} = 0, or i = N-1) the letter simply lands on k_i.
    """
    _check_gen(i, m.n)
    d = list(m.d)
    k = list(m.k)
    if i <= m.n - 2 and k[i] >= 1:
        d[i - 1] += 1
        k[i - 1] += 1
        k[i] -= 1
    else:
        k[i - 1] += 1
    return NormalMonomial(m.n, tuple(d), tuple(k))


def normalize(w: Word) -> NormalMonomial:
    """Normal form of a word: fold right multiplications left to right."""
    m = NormalMonomial.unit(w.n)
    for a in w.letters:
        m = right_mul_gen(m, a)
    return m


def normalize_right_to_left(w: Word) -> NormalMonomial:
    """Cross-check fold: left multiplications applied right to left.

    Must agree with :func:`normalize` on every word.
    """
    m = NormalMonomial.unit(w.n)
    for a in reversed(w.letters):
        m = left_mul_gen(a, m)
    return m


def gen_monomial(n: int, i: int) -> NormalMonomial:
    """The generator a_i as a basis monomial (k_i = 1, all else 0)."""
    _check_gen(i, n)
    k = [0] * (n - 1)
    k[i - 1] = 1
    return NormalMonomial(n, (0,) * (n - 2), tuple(k))


def gen_element(n: int, i: int) -> AlgebraElement:
    return AlgebraElement.from_monomial(gen_monomial(n, i))


def nm_product(m1: NormalMonomial, m2: NormalMonomial) -> NormalMonomial:
    """Product of two basis monomials (always again a basis monomial)."""
    if m1.n != m2.n:
        raise ValueError("rank mismatch")
    out = m1
    for a in nm_to_word(m2).letters:
        out = right_mul_gen(out, a)
    return out


def element_product(e1: AlgebraElement, e2: AlgebraElement) -> AlgebraElement:
    """Bilinear product; may vanish on nonzero inputs (zero divisors exist)."""
    if e1.n != e2.n:
        raise ValueError("rank mismatch")
    acc: dict[NormalMonomial, Fraction] = {}
    for m2, c2 in e2.terms.items():
        letters = nm_to_word(m2).letters
        for m1, c1 in e1.terms.items():
            m = m1
            for a in letters:
                m = right_mul_gen(m, a)
            acc[m] = acc.get(m, Fraction(0)) + c1 * c2
    return AlgebraElement(e1.n, acc)


def enumerate_basis(delta: MultiDegree) -> list[NormalMonomial]:
    """All basis monomials of one multidegree, ordered lexicographically by (d, k).

    Within a fixed multidegree the saturation bound d_i <= d_{i-1} + k_{i-1}
    becomes d_i <= delta_{i-1} (the right side always sums to delta_{i-1}),
    and d_i <= delta_i keeps k_i nonnegative, so the admissible d-tuples
    form a box and k is determined as delta - d.
    """
    n = delta.n
    c = delta.counts
    ranges = [range(min(c[i - 1], c[i - 2]) + 1) for i in range(2, n)]
    out = []
    for d in product(*ranges):
        k = (c[0],) + tuple(c[i - 1] - d[i - 2] for i in range(2, n))
        out.append(NormalMonomial(n, d, k))
    return out
