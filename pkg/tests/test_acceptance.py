"""Exit criteria. Each test records one PASS/FAIL line, printed at the end
of the run (see ``pytest_terminal_summary`` in conftest)."""

import json
import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

import oracles
from conftest import ACCEPTANCE, random_monotone
from test_category import all_monotone
from topadjoint.adjunction import (
    HomCaseKind,
    _classify,
    is_adjoint,
    try_left_adjoint,
    try_right_adjoint,
)
from topadjoint.campaign import enumerate_functions, run_campaign
from topadjoint.category import check_naturality
from topadjoint.cli import main
from topadjoint.continuity import (
    check_ddag,
    forward_inclusion_lemma,
    induced_direct,
    induced_inverse,
    is_continuous,
    proof_conditions,
)
from topadjoint.topology import Subset, closure, enumerate_spaces

SIZES = range(4)


def sweep():
    """Every function between every ordered pair of spaces on <= 3 points."""
    for nx in SIZES:
        for ny in SIZES:
            for X in enumerate_spaces(nx):
                for Y in enumerate_spaces(ny):
                    yield from enumerate_functions(X, Y)


@contextmanager
def criterion(key):
    detail = ["ok"]
    try:
        yield detail
    except BaseException as exc:
        ACCEPTANCE[key] = (False, f"{type(exc).__name__}: {exc}"[:200])
        raise
    ACCEPTANCE[key] = (True, detail[0])


def test_1_exhaustive_theorem():
    with criterion("1 exhaustive theorem (n <= 3, < 10 s)") as detail:
        start = time.perf_counter()
        report = run_campaign(3)
        elapsed = time.perf_counter() - start
        assert report.mismatches == []
        assert elapsed < 10.0, f"campaign took {elapsed:.1f}s"
        direct = 0
        for phi in sweep():
            cont = bool(is_continuous(phi))
            assert cont == bool(is_adjoint(induced_direct(phi), induced_inverse(phi))), phi
            direct += 1
        assert direct == report.functions_checked
        detail[0] = (
            f"{report.functions_checked} functions, {report.continuous_count} continuous, "
            f"0 mismatches, campaign {elapsed:.2f}s"
        )


@pytest.mark.slow
def test_1_extended_four_points():
    with criterion("1 exhaustive theorem, extended n = 4") as detail:
        report = run_campaign(4, include_four=True)
        assert report.mismatches == []
        assert report.spaces_checked[4] == 355
        detail[0] = (
            f"{report.functions_checked} functions, {report.continuous_count} continuous, "
            f"0 mismatches, {report.elapsed:.1f}s"
        )


def test_2_enumeration_counts():
    with criterion("2 enumeration counts 1, 1, 4, 29, 355") as detail:
        got = [sum(1 for _ in enumerate_spaces(n)) for n in range(5)]
        assert got == [1, 1, 4, 29, 355]
        for n in range(4):
            brute = set(oracles.all_topologies(n))
            ours = {frozenset(oracles.to_sets(m) for m in X.closed_family) for X in enumerate_spaces(n)}
            assert ours == brute
        assert oracles.count_topologies_fast(4) == 355
        detail[0] = f"counts {got}, equal to brute-force filter"


def test_3_equivalence_chain():
    with criterion("3 ddag == adjoint and c2 = c3 = c4") as detail:
        functions = pairs = 0
        for phi in sweep():
            adj = bool(is_adjoint(induced_direct(phi), induced_inverse(phi)))
            assert bool(check_ddag(phi)) == adj, phi
            for u in phi.domain.closed_subsets():
                for v in phi.codomain.closed_subsets():
                    c2, c3, c4 = proof_conditions(phi, u, v)
                    assert c2 == c3 == c4, (phi, u, v)
                    pairs += 1
            functions += 1
        detail[0] = f"{functions} functions, {pairs} closed pairs, 0 exceptions"


def test_4_forward_lemma():
    with criterion("4 forward inclusion lemma") as detail:
        pairs = 0
        for phi in sweep():
            for u in phi.domain.closed_subsets():
                for v in phi.codomain.closed_subsets():
                    assert forward_inclusion_lemma(phi, u, v), (phi, u, v)
                    pairs += 1
        detail[0] = f"true on all {pairs} inputs"


def _dict(m):
    return {oracles.to_sets(u): oracles.to_sets(v) for u, v in m.pairs()}


def test_5_uniqueness_and_synthesis():
    with criterion("5 adjoint uniqueness and synthesis") as detail:
        # exhaustive over every monotone pair between 2-point spaces
        two = list(enumerate_spaces(2))
        exhaustive = 0
        for X, Y in product(two, two):
            fam_x = [oracles.to_sets(m) for m in X.closed_family]
            fam_y = [oracles.to_sets(m) for m in Y.closed_family]
            forward, backward = list(all_monotone(X, Y)), list(all_monotone(Y, X))
            adj = {}
            for f in forward:
                for g in backward:
                    adj[f, g] = oracles.adjoint(fam_x, fam_y, _dict(f), _dict(g))
                    assert bool(is_adjoint(f, g)) == adj[f, g]
                    exhaustive += 1
            for f in forward:
                rights = [g for g in backward if adj[f, g]]
                assert len(rights) <= 1
                assert try_right_adjoint(f) == (rights[0] if rights else None)
            for g in backward:
                lefts = [f for f in forward if adj[f, g]]
                assert len(lefts) <= 1
                assert try_left_adjoint(g) == (lefts[0] if lefts else None)

        # sampled at n = 3
        rng = random.Random(20140101)
        three = list(enumerate_spaces(3))
        samples = with_adjoint = 0
        while samples < 10_000:
            X, Y = rng.choice(three), rng.choice(three)
            phi = random_monotone(X, Y, rng)
            fam_x = [oracles.to_sets(m) for m in X.closed_family]
            fam_y = [oracles.to_sets(m) for m in Y.closed_family]
            cands = oracles.right_adjoint_candidates(fam_x, fam_y, _dict(phi))
            assert all(len(c) <= 1 for c in cands.values())
            exists = all(cands.values())
            right = try_right_adjoint(phi)
            assert (right is not None) == exists
            if right is not None:
                assert _dict(right) == {v: c[0] for v, c in cands.items()}
                assert try_left_adjoint(right) == phi
                with_adjoint += 1
            psi = right if (right is not None and rng.random() < 0.5) else random_monotone(Y, X, rng)
            if is_adjoint(phi, psi):
                assert psi == right
                assert try_left_adjoint(psi) == phi
            samples += 1
        detail[0] = (
            f"{exhaustive} exhaustive 2-point pairs; {samples} sampled n=3 maps "
            f"({with_adjoint} with a right adjoint)"
        )


def test_6_witness_validity():
    with criterion("6 witness validity") as detail:
        discontinuous = 0
        for phi in sweep():
            X, Y = phi.domain, phi.codomain
            cont = is_continuous(phi)
            direct, inverse = induced_direct(phi), induced_inverse(phi)
            adj = is_adjoint(direct, inverse)
            if not cont:
                v = cont.witness.mask
                assert v in Y.index
                assert phi.preimage_mask(v) not in X.index
                u = X.closure_table[phi.preimage_mask(v)]
                assert phi.image_mask(u) & ~v != 0
                discontinuous += 1
            if not adj:
                u, v = adj.witness[0].mask, adj.witness[1].mask
                left = direct.apply_mask(u) & ~v == 0
                right = u & ~inverse.apply_mask(v) == 0
                assert left != right
        detail[0] = f"{discontinuous} discontinuous functions, all witnesses valid"


def test_7_case_dichotomy_and_naturality():
    with criterion("7 case dichotomy and naturality") as detail:
        adjoint_pairs = non_adjoint = 0
        for phi in sweep():
            direct, inverse = induced_direct(phi), induced_inverse(phi)
            kinds = {
                _classify(direct.apply_mask(u), v, u, inverse.apply_mask(v))
                for u in phi.domain.closed_family
                for v in phi.codomain.closed_family
            }
            if is_adjoint(direct, inverse):
                assert HomCaseKind.NO_BIJECTION not in kinds
                assert check_naturality(direct, inverse)
                adjoint_pairs += 1
            else:
                assert HomCaseKind.NO_BIJECTION in kinds
                non_adjoint += 1
        detail[0] = f"{adjoint_pairs} adjoint pairs natural; {non_adjoint} non-adjoint pairs each with a NoBijection"


def test_8_closure_laws():
    with criterion("8 closure operator laws") as detail:
        spaces = subsets = 0
        for n in SIZES:
            for X in enumerate_spaces(n):
                all_s = range(1 << n)
                cl = [closure(X, Subset(s, n)).mask for s in all_s]
                for s in all_s:
                    assert s & ~cl[s] == 0
                    assert cl[cl[s]] == cl[s]
                    for t in all_s:
                        if s & ~t == 0:
                            assert cl[s] & ~cl[t] == 0
                    subsets += 1
                assert sorted(set(cl)) == list(X.closed_family)
                spaces += 1
        detail[0] = f"{spaces} spaces, {subsets} subsets"


GOLDEN_CASES = [
    ("sierpinski closure", ["closure", "sierpinski.json", "--set", "a"], "closure_sierpinski_a", 0),
    ("identity verify-one", ["verify-one", "identity.json"], "verify_identity", 0),
    ("indiscrete->discrete verify-one", ["verify-one", "indiscrete_to_discrete.json"], "verify_indiscrete_discrete", 1),
]


def test_9_cli_golden(data_dir, capsys):
    with criterion("9 CLI golden outputs") as detail:
        for _, args, stem, code in GOLDEN_CASES:
            argv = [str(data_dir / a) if a.endswith(".json") else a for a in args]
            assert main(argv) == code
            assert capsys.readouterr().out == (data_dir / "golden" / f"{stem}.txt").read_text()
            assert main(["--json", *argv]) == code
            out = capsys.readouterr().out
            assert out == (data_dir / "golden" / f"{stem}.json").read_text()
            json.loads(out)
        detail[0] = "text and JSON match, exit codes 0/0/1"
