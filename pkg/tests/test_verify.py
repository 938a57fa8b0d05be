import json
import shutil

import pytest

from oriented_pursuit import generators as gen
from oriented_pursuit.graph import OrientedGraph
from oriented_pursuit.io import dumps
from oriented_pursuit.verify import (
    CheckResult,
    Corpus,
    ManifestError,
    Oracle,
    Report,
    check_copwin_triangle_claim,
    check_eq1,
    check_not_copwin,
    check_projection_observations,
    check_retract_invariance,
    check_strong_subdiv_bounds,
    check_subdivision_structure,
    check_tree_characterization,
    check_triangle_free_equality,
    check_undirected_subdivision_probe,
    check_weak_cop_bound_s2,
    check_weak_subdiv_monotone,
    default_corpus_dir,
    load_manifest,
    run_all,
)

K2, K3, C4, C5, P3, P4 = gen.complete(2), gen.complete(3), gen.cycle(4), gen.cycle(5), gen.path(3), gen.path(4)
DC3, ARC = gen.directed_cycle(3), gen.directed_path(2)


def test_eq1_examples():
    oracle = Oracle()
    assert check_eq1([DC3, ARC], oracle).status == "pass"
    assert oracle.chain(DC3) == (1, 2, 2) and oracle.chain(ARC) == (1, 1, 1)
    r = check_eq1(list(gen.enumerate_connected(3, oriented=True)))
    assert r.status == "pass" and r.instances == 20


def test_strong_subdivision_bounds_examples():
    oracle = Oracle()
    assert check_strong_subdiv_bounds([K3, P3, C4], 2, oracle).status == "pass"
    s = lambda g: oracle.strong_subdivision(g, 2).graph
    assert oracle.chain(s(K3))[:2] == (2, 2)
    assert oracle.cop_number(s(P3), "strong") == 1
    assert oracle.cop_number(s(C4), "strong") == 2


def test_weak_cop_bound_examples():
    oracle = Oracle()
    assert check_weak_cop_bound_s2([K2, K3, C4], oracle).status == "pass"


def test_triangle_free_and_tree_examples():
    assert check_triangle_free_equality([C4, C5, P4, K3], 2).instances == 3
    assert check_triangle_free_equality([C4, C5], 2).status == "pass"
    assert check_triangle_free_equality([P3, P4], (2, 3)).status == "pass"
    r = check_tree_characterization([P4, K3], 2)
    assert r.status == "pass" and r.instances == 2
    assert check_tree_characterization([C4], 3).status == "pass"


def test_copwin_triangle_examples():
    assert check_copwin_triangle_claim([K3, gen.paw(), C4, P4]).status == "pass"


def test_weak_monotone_and_retract_examples(transitive):
    tour = gen.generate(gen.GeneratorSpec(gen.Family.TOURNAMENT, 4, 5))
    assert check_weak_subdiv_monotone([DC3, tour], 2).status == "pass"
    assert check_weak_subdiv_monotone([ARC], 3).status == "pass"
    for kind in ("strong", "distributed", "weak"):
        r = check_retract_invariance([transitive], kind)
        assert r.status == "pass" and r.instances == 1
    # a sink added to a directed triangle
    g = OrientedGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)])
    assert check_retract_invariance([g], "distributed").status == "pass"


def test_not_copwin_check():
    r = check_not_copwin([DC3, ARC, gen.directed_cycle(5)])
    assert r.status == "pass" and r.instances == 2


def test_structure_and_observations():
    oracle = Oracle()
    check_strong_subdiv_bounds([K3], (2, 3), oracle)
    check_weak_subdiv_monotone([DC3], (2,), oracle)
    r = check_projection_observations(oracle.subdivisions)
    assert r.status == "pass" and r.instances == 3
    r = check_subdivision_structure([K3, C4, gen.UndirectedGraph(1)])
    assert r.status == "pass" and r.instances == 2


def test_probe_runs_on_triangle_free_graphs():
    r = check_undirected_subdivision_probe([C4, P3, K3], (2,))
    assert r.instances == 2 and r.status == "pass"


def test_skips_are_reported_not_dropped():
    r = check_strong_subdiv_bounds([K3], 2, Oracle(max_k=1))
    assert r.status == "skip" and r.skipped == 1
    assert r.to_dict()["skipped"] == 1 and "witness" in r.to_dict()
    rep = Report([CheckResult("a"), r])
    assert not rep.failed and "skip" in rep.summary()


def test_fail_keeps_first_witness():
    r = CheckResult("x")
    r.fail({"n": 1})
    r.skip({"n": 2})
    r.fail({"n": 3})
    assert r.status == "fail" and r.witness == {"n": 1} and r.instances == 3


def test_empty_corpus(tmp_path):
    (tmp_path / "manifest.json").write_text(json.dumps({"version": 1, "entries": []}))
    rep = run_all(tmp_path)
    assert rep.results == [] and not rep.failed and rep.to_json_lines() == ""


def test_mutant_solver_is_caught():
    mutant = Oracle(max_k=3, capture_on_robber_move=False)
    corpus = [K2, K3, P3, C4, gen.paw()]
    assert check_strong_subdiv_bounds(corpus, (2,), mutant).status == "fail"
    assert check_strong_subdiv_bounds(corpus, (2,), Oracle(max_k=3)).status == "pass"


def _small_corpus(tmp_path, files):
    src = default_corpus_dir()
    data = json.loads((src / "manifest.json").read_text())
    entries = [e for e in data["entries"] if e["file"] in files]
    for e in entries:
        shutil.copy(src / e["file"], tmp_path / e["file"])
    data["entries"] = entries
    data["enumerations"] = {"undirected_max_n": 4, "tree_max_n": 4, "oriented_max_n": 3}
    (tmp_path / "manifest.json").write_text(json.dumps(data))
    return tmp_path


def test_manifest_round_trip_and_determinism(tmp_path):
    root = _small_corpus(tmp_path, {"k3.json", "c4.json", "dc3.json", "tree_00.json"})
    corpus = load_manifest(root)
    assert len(corpus.named_undirected) == 2 and len(corpus.random_undirected) == 1
    a, b = run_all(root), run_all(root / "manifest.json")
    assert a.to_json_lines() == b.to_json_lines()
    assert not a.failed
    ids = [r.id for r in a.results]
    assert ids[:2] == ["model-chain", "strong-retract-invariance"] and len(ids) == 14


def test_manifest_sha_mismatch(tmp_path):
    root = _small_corpus(tmp_path, {"k3.json"})
    (root / "k3.json").write_text(dumps(gen.cycle(3).__class__(3, [(0, 1), (1, 2)])))
    with pytest.raises(ManifestError):
        load_manifest(root)


def test_default_corpus_matches_manifest():
    corpus = load_manifest(default_corpus_dir())
    assert len(corpus.retract_instances) == 50
    assert len(corpus.named_undirected) >= 8 and len(corpus.named_oriented) >= 4


def test_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("ORIENTED_PURSUIT_CORPUS", str(tmp_path))
    assert default_corpus_dir() == tmp_path
