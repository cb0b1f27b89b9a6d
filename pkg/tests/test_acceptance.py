"""Exit criteria: one test per acceptance criterion, each at its stated bound."""
import random
import subprocess
import sys
import time

from fimfp2.cayley import EdgeKind, ball_edges, verify_classification
from fimfp2.fim import fim_equal, formal_inverse, monogenic_to_general, munn_tree
from fimfp2.homology import (
    rank_check,
    verify_basis,
    verify_chain_complex,
    verify_filtration,
    verify_strictness,
    verify_strong_cycles,
    verify_transition_basis,
    verify_w0,
)
from fimfp2.monogenic import all_words, enumerate_ball, eval_word, verify_identities, verify_normal_forms

SEED = 20261017
TIME_BUDGET_S = 60


def test_01_defining_relations(record_criterion):
    start = time.perf_counter()
    words = [monogenic_to_general(w) for w in all_words(8)]
    failures = 0
    checked = 0
    for w in words:
        checked += 1
        failures += not fim_equal(w + formal_inverse(w) + w, w, "a")
    idem = {w: w + formal_inverse(w) for w in words}
    for w in words:
        for z in words:
            checked += 1
            failures += not fim_equal(idem[w] + idem[z], idem[z] + idem[w], "a")
    rng = random.Random(SEED)
    for _ in range(10_000):
        w = monogenic_to_general("".join(rng.choice("xy") for _ in range(rng.randint(0, 12))))
        z = monogenic_to_general("".join(rng.choice("xy") for _ in range(rng.randint(0, 12))))
        wi, zi = formal_inverse(w), formal_inverse(z)
        checked += 2
        failures += not fim_equal(w + wi + w, w, "a")
        failures += not fim_equal(w + wi + z + zi, z + zi + w + wi, "a")
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < TIME_BUDGET_S
    record_criterion(1, "defining relations", ok, f"checked={checked} failures={failures} {elapsed:.1f}s")
    assert ok


def test_02_representation_oracle(record_criterion):
    words = list(all_words(7))
    trees = [munn_tree(monogenic_to_general(w), "a") for w in words]
    intervals = [eval_word(w) for w in words]
    disagreements = 0
    for i in range(len(words)):
        for j in range(len(words)):
            disagreements += (trees[i] == trees[j]) != (intervals[i] == intervals[j])
    ok = disagreements == 0
    record_criterion(2, "interval vs Munn-tree equality", ok, f"pairs={len(words) ** 2} disagreements={disagreements}")
    assert ok


def test_03_identities(record_criterion):
    r = verify_identities(30)
    record_criterion(3, "identities (1)-(3), n,k <= 30", r.passed, f"checked={r.checked} failures={r.failures}")
    assert r.passed


def test_04_normal_forms(record_criterion):
    r = verify_normal_forms(8, 10)
    ok = r.passed and len(enumerate_ball(8)) == 285
    record_criterion(4, "normal forms on ball 8, words <= 10", ok, f"checked={r.checked} failures={r.failures}")
    assert ok


def test_05_edge_classification(record_criterion):
    r = verify_classification(8)
    edges = ball_edges(8)
    partition = all(sum(cls.kind is kind for kind in EdgeKind) == 1 for _, cls in edges)
    counts = r.details["counts"]
    ok = r.passed and partition and sum(counts.values()) == len(edges)
    record_criterion(5, "edge classification on ball 8", ok, f"edges={len(edges)} {counts} failures={r.failures}")
    assert ok


def test_06_basis_sanity(record_criterion):
    reports = [verify_basis(6), verify_strong_cycles(10), verify_transition_basis(10)]
    ok = all(r.passed for r in reports)
    detail = " ".join(f"{r.check}:{r.checked}/{r.failures}" for r in reports)
    record_criterion(6, "basis cycles, 2-cycle and geodesic formulas", ok, detail)
    assert ok


def test_07_chain_complex(record_criterion):
    r = verify_chain_complex(8, samples=1000, seed=SEED)
    ranks = [rank_check(N) for N in range(1, 9)]
    ok = r.passed and all(x.passed for x in ranks)
    record_criterion(
        7,
        "chain complex and rank identity",
        ok,
        f"checked={r.checked} failures={r.failures} rank N=1..8 ok={all(x.passed for x in ranks)}",
    )
    assert ok


def test_08_w0_closure(record_criterion):
    r = verify_w0(8)
    record_criterion(8, "W_0 is a submodule (ball 8)", r.passed, f"checked={r.checked} failures={r.failures}")
    assert r.passed


def test_09_inductive_step(record_criterion):
    r = verify_filtration(12)
    edges = r.details["transition_edges"]
    ok = r.passed and edges == 78
    record_criterion(9, "W_k is a submodule, k <= 12", ok, f"edges={edges} actions={2 * edges} failures={r.failures}")
    assert ok


def test_10_strictness(record_criterion):
    r = verify_strictness(12)
    ok = r.passed and len(r.details["witnesses"]) == 12
    record_criterion(10, "strict chain W_0 < W_1 < ... < W_12", ok, f"witnesses={len(r.details['witnesses'])}")
    assert ok


def test_11_cli_determinism(record_criterion, tmp_path):
    outputs, codes = [], []
    for i in range(2):
        path = tmp_path / f"report{i}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "fimfp2", "verify", "all", "--size", "8", "--max-weight", "12",
             "--report", str(path)],
            capture_output=True,
        )
        codes.append(proc.returncode)
        outputs.append(path.read_bytes())
    ok = codes == [0, 0] and outputs[0] == outputs[1]
    record_criterion(11, "CLI verify all: exit 0, byte-stable report", ok, f"exit={codes} bytes={len(outputs[0])}")
    assert ok
