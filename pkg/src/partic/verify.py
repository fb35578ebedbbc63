"""Umbrella certification suite behind the ``verify`` CLI subcommand.

Each check is a pure function of its bounds; the report lists checks by
name so output is reproducible independent of execution order.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .center import center_basis_in_degree, central_candidate, expected_center_dimension
from .core import AlgebraElement, Word, multidegree, multidegrees_up_to, nm_to_word
from .normal_form import enumerate_basis, normalize, normalize_right_to_left
from .particles import act_word, configurations, faithfulness_check
from .rewriting import (
    PARTIC,
    congruence_partition,
    count_classes,
    one_step_rewrites,
    partic_rules,
    relation_set,
)


@dataclass(frozen=True)
class VerifyConfig:
    n: int
    max_len: int = 6
    relations: str = PARTIC
    include_center: bool = False
    max_degree: int = 6
    max_deposit: int = 1


@dataclass
class VerifyCheck:
    name: str
    params: dict
    passed: bool
    counterexample: str | None
    seconds: float


@dataclass
class VerifyReport:
    checks: list[VerifyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _all_words(n: int, max_len: int) -> Iterator[tuple[int, ...]]:
    for length in range(max_len + 1):
        yield from product(range(1, n), repeat=length)


def _check_grading(cfg: VerifyConfig):
    rs = relation_set(cfg.relations, cfg.n)
    for letters in _all_words(cfg.n, cfg.max_len):
        w = Word(cfg.n, letters)
        md = multidegree(w)
        for w2 in one_step_rewrites(w, rs):
            if multidegree(w2) != md:
                return False, f"{letters} -> {w2.letters} changes the multidegree"
    return True, None


def _check_basis_count(cfg: VerifyConfig):
    # plactic refines the partic classes, so there only ">=" can be asserted
    rs = relation_set(cfg.relations, cfg.n)
    for delta in multidegrees_up_to(cfg.n, cfg.max_len):
        nc = count_classes(delta, rs)
        nb = len(enumerate_basis(delta))
        ok = nc == nb if cfg.relations == PARTIC else nc >= nb
        if not ok:
            return False, f"degree ({delta}): {nc} classes vs {nb} basis monomials"
    return True, None


def _check_normal_form(cfg: VerifyConfig):
    rs = partic_rules(cfg.n)
    for delta in multidegrees_up_to(cfg.n, cfg.max_len):
        seen = {}
        for cls in congruence_partition(delta, rs):
            forms = {normalize(Word(cfg.n, letters)) for letters in cls}
            if len(forms) != 1:
                return False, f"class of {min(cls)} has {len(forms)} normal forms"
            nf = forms.pop()
            if nf in seen:
                return False, f"classes of {min(cls)} and {seen[nf]} share a normal form"
            seen[nf] = min(cls)
            if nm_to_word(nf).letters not in cls:
                return False, f"expansion of {nf} leaves the class of {min(cls)}"
    return True, None


def _check_fold_agreement(cfg: VerifyConfig):
    for letters in _all_words(cfg.n, cfg.max_len):
        w = Word(cfg.n, letters)
        if normalize(w) != normalize_right_to_left(w):
            return False, f"folds disagree on {letters}"
    return True, None


def _check_action_factoring(cfg: VerifyConfig):
    configs = list(configurations(cfg.n, cfg.max_len, cfg.max_deposit))
    for letters in _all_words(cfg.n, cfg.max_len):
        w = Word(cfg.n, letters)
        nf_word = nm_to_word(normalize(w))
        for c in configs:
            if act_word(w, c) != act_word(nf_word, c):
                return False, f"word {letters} and its normal form act differently on {c}"
    return True, None


def _check_faithfulness(cfg: VerifyConfig):
    if faithfulness_check(cfg.n, cfg.max_len):
        return True, None
    return False, "two basis monomials share an (input, output) label"


def _check_center(cfg: VerifyConfig):
    for delta in multidegrees_up_to(cfg.n, cfg.max_degree):
        basis = center_basis_in_degree(cfg.n, delta)
        want = expected_center_dimension(delta)
        if len(basis) != want:
            return False, f"degree ({delta}): dimension {len(basis)}, expected {want}"
        if want == 1:
            cand = AlgebraElement.from_monomial(central_candidate(cfg.n, delta.counts[0]))
            if basis[0] != cand:
                return False, f"degree ({delta}): basis element differs from the candidate"
    return True, None


def run_verify(cfg: VerifyConfig) -> VerifyReport:
    checks: list[tuple[str, Callable]] = [
        ("action-factoring", _check_action_factoring),
        ("basis-count", _check_basis_count),
        ("faithfulness", _check_faithfulness),
        ("fold-agreement", _check_fold_agreement),
        ("grading", _check_grading),
        ("normal-form", _check_normal_form),
    ]
    if cfg.include_center:
        checks.append(("center-dimensions", _check_center))
    checks.sort(key=lambda item: item[0])

    params = {"N": cfg.n, "max_len": cfg.max_len, "relations": cfg.relations}
    report = VerifyReport()
    for name, fn in checks:
        p = dict(params)
        if name == "center-dimensions":
            p["max_degree"] = cfg.max_degree
        if name == "action-factoring":
            p["max_deposit"] = cfg.max_deposit
        t0 = time.perf_counter()
        passed, counterexample = fn(cfg)
        report.checks.append(
            VerifyCheck(name, p, passed, counterexample, time.perf_counter() - t0)
        )
    return report
