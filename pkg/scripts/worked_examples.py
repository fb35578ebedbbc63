#!/usr/bin/env python3
"""Walk through the package's headline computations, printing each result.

Run after ``pip install -e .`` (or with PYTHONPATH=src).
"""
from __future__ import annotations

from partic import (
    AffineConfiguration,
    AffineWord,
    AlgebraElement,
    Configuration,
    NormalMonomial,
    Word,
    act_word,
    affine_act_word,
    central_candidate,
    element_product,
    gen_element,
    io_label,
    label_mul,
    min_input,
    nm_to_word,
    normalize,
    output_of,
)


def section(title: str) -> None:
    print(f"\n== {title}")


def main() -> None:
    section("normal form of a word (N=5)")
    w = Word(5, (4, 3, 2, 1, 2))
    m = normalize(w)
    print(f"word {w} normalizes to {m}  (d={list(m.d)}, k={list(m.k)})")

    section("particle action on the nine-position line")
    start = Configuration(9, (3, 0, 0, 1, 0, 1, 2, 0, 1))
    moved = act_word(Word(9, (6, 5, 4)), start)
    print(f"a6 a5 a4 moves {start} to {moved}")

    section("a central element sweeping the line (N=9, r=5)")
    c = central_candidate(9, 5)
    five = Configuration(9, (5,) + (0,) * 8)
    print(f"{c} maps {five} to {act_word(nm_to_word(c), five)}")

    section("input/output labelling (N=6)")
    m6 = NormalMonomial(6, (0, 0, 0, 1), (0, 2, 1, 2, 0))
    print(f"monomial {m6}: minimal input {min_input(m6)}, output {output_of(m6)}")
    lab = io_label(m6)
    for i in (3, 1):
        for side in ("left", "right"):
            out = label_mul(lab, i, side)
            print(f"  a{i} {side:>5}: output {out.i_out}  input {out.j_in}")

    section("zero divisors (N=4)")
    m1 = NormalMonomial(4, (8, 5), (8, 3, 1))
    m2 = NormalMonomial(4, (7, 5), (8, 4, 1))
    diff = AlgebraElement(4, {m1: 1, m2: -1})
    prod = element_product(gen_element(4, 2), diff)
    print(f"a2 * ({diff.pretty()}) = {prod.pretty()}")

    section("affine action on the eight-position circle")
    ac = AffineConfiguration(8, (3, 1, 0, 0, 2, 0, 0, 1), 0)
    print(f"a6 a5 a3 a2 a5 moves ({ac}) to ({affine_act_word(AffineWord(8, (6, 5, 3, 2, 5)), ac)})")


if __name__ == "__main__":
    main()
