import numpy as np
import pytest

import szegedy as sz


def test_cycle_matches_dense_oracle():
    p = sz.cycle_graph(8)
    circuit = sz.synth_cycle(3)
    assert circuit.width == 6
    report = sz.verify(circuit, p)
    assert report["passed"]
    assert report["max_deviation"] < 1e-12

    # Independent check: the circuit block on |i, j> equals S (2 Pi - I).
    u = circuit.unitary()
    oracle = sz.walk_operator(p)
    assert np.allclose(u[:64, :64], oracle, atol=1e-12)


def test_walk_operator_is_orthogonal_involution_pair():
    p = sz.google_matrix(sz.wheel_graph(8, directed=True), 0.85)
    u = sz.walk_operator(p)
    assert np.allclose(u.T @ u, np.eye(81), atol=1e-12)
    assert np.allclose(p.sum(axis=0), 1.0)


def test_synthesize_from_dict_and_json_string():
    a = sz.synthesize({"type": "bipartite", "params": {"n1": 4, "n2": 2}})
    b = sz.synthesize('{"type": "bipartite", "params": {"n1": 4, "n2": 2}}')
    assert a == b
    assert sz.verify(a, sz.complete_bipartite(4, 2))["passed"]
    assert np.array_equal(sz.spec_matrix({"type": "cycle", "params": {"n": 8}}), sz.cycle_graph(8))


def test_state_prep_reaches_target():
    rng = np.random.default_rng(7)
    target = rng.random(16)
    target /= np.linalg.norm(target)
    k = sz.state_prep(target.tolist(), basis=5)
    start = np.zeros(16, dtype=complex)
    start[5] = 1.0
    assert np.allclose(k.apply(start), target, atol=1e-12)


def test_text_round_trip_and_qasm():
    c = sz.synth_complete(2)
    assert sz.Circuit.from_text(c.to_text()) == c
    assert c.to_qasm().startswith("OPENQASM 3")
    counts = c.gate_count()
    assert counts["total"] == len(c) and counts["decomposed"] >= counts["total"]


def test_pagerank_wheel_hub_wins():
    p = sz.google_matrix(sz.wheel_graph(8), 0.85)
    q, avg = sz.pagerank(sz.synth_wheel(3, False, 0.85), p, steps=200)
    assert q.shape == (200, 9)
    assert np.allclose(q.sum(axis=1), 1.0, atol=1e-10)
    assert avg[8] > avg[:8].max()


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        sz.synth_cycle(1)
    with pytest.raises(sz.InvalidInput):
        sz.synthesize({"type": "no-such-graph"})
    bad = np.array([[0.5, 0.5], [0.4, 0.5]])
    with pytest.raises(ValueError):
        sz.walk_operator(bad)
