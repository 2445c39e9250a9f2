import dataclasses

import pytest

from jpart import (
    Bipartition,
    CounterexampleError,
    bisection_slack,
    build_graph,
    build_realization,
    claim1_decompose,
    degree_sequence,
    max_bisection,
    reduction_trace,
    select_pivot_z,
    verify_certificate,
)
from jpart.hs_realization import Claim1Decomposition, RealizationCertificate

from conftest import all_nonincreasing_tuples, degree_sequence_set, random_graphic_sequence


def _join_graph():
    """Clique on v1..v3 joined to five independent vertices."""
    return build_graph(
        8, [(u, v) for u in (1, 2, 3) for v in range(u + 1, 9)]
    )


def test_base_case_single_edge():
    cert = build_realization((1, 1))
    assert cert.graph.edges == frozenset({(1, 2)})
    assert cert.slacks == (2, 2)


def test_triangle():
    cert = build_realization((2, 2, 2))
    assert degree_sequence(cert.graph).values == (2, 2, 2)
    assert cert.bisection.cross_degrees() == (1, 2, 1)
    assert min(cert.slacks) >= 0


def test_join_sequence_realizes_with_good_parity_bisection():
    pi = (7, 7, 7, 3, 3, 3, 3, 3)
    cert = build_realization(pi)
    assert cert.graph.degrees() == pi
    assert min(cert.slacks) >= 0
    assert verify_certificate(cert, pi)


def test_rejects_non_graphic():
    with pytest.raises(ValueError):
        build_realization((3, 3, 1, 1))


def test_claim1_from_double_layoff_trace():
    # reducing (2,2,2,2,2) at ell=1 gives omega=(2,2,2), omega'=(2,1,1)
    _, records = reduction_trace((2, 2, 2, 2, 2))
    rec = records[0]
    assert rec.ell == 1 and rec.k == 2 and rec.K == 2 and rec.epsilon == 0
    d = rec.decomp
    assert len(d.x1) + 2 * len(d.x2) == 2 * rec.K
    assert d.x1 == frozenset({1, 2}) and d.x2 == frozenset({3})


def test_claim1_degenerate_zero_layoff():
    d = claim1_decompose((0, 0), (0, 0), (0, 0), 0)
    assert d.x1 == d.x2 == d.r1 == d.r2 == d.r1p == d.r2p == d.q == frozenset()


def test_claim1_r2_structure():
    _, records = reduction_trace((3, 3, 3, 3, 2, 2))
    for rec in records:
        d = rec.decomp
        assert d.r2 == frozenset() or d.r2 == d.q


def test_claim1_rejects_inconsistent_inputs():
    with pytest.raises(ValueError):
        claim1_decompose((2, 2), (2, 1), (1, 1), 2)  # only 1 drop per round
    with pytest.raises(ValueError):
        claim1_decompose((2, 2), (2, 0), (2, 0), 1)  # entry dropped by 2


def _pivot_fixture(case, xj, xf, yj, yf):
    """Minimal decomposition with one candidate in each X1 block."""
    par = 0 if case == 2 else 1
    x_idx = 2 - par  # index with the right parity in r1p
    y_idx = 4 - par
    decomp = Claim1Decomposition(
        x1=frozenset({x_idx, y_idx}),
        x2=frozenset(),
        r1=frozenset(),
        r2=frozenset(),
        r1p=frozenset({x_idx}),
        r2p=frozenset({y_idx}),
        q=frozenset(),
        K=1,
        epsilon=0,
        s=0,
    )
    j_deg = [0] * 4
    f_deg = [0] * 4
    j_deg[x_idx - 1], f_deg[x_idx - 1] = xj, xf
    j_deg[y_idx - 1], f_deg[y_idx - 1] = yj, yf
    return decomp, j_deg, f_deg, x_idx, y_idx


def test_select_pivot_prefers_x_when_it_qualifies():
    decomp, j_deg, f_deg, x_idx, _ = _pivot_fixture(2, xj=2, xf=4, yj=1, yf=3)
    assert select_pivot_z(decomp, j_deg, f_deg, 2) == x_idx


def test_select_pivot_falls_back_to_y():
    decomp, j_deg, f_deg, _, y_idx = _pivot_fixture(2, xj=1, xf=3, yj=1, yf=2)
    assert select_pivot_z(decomp, j_deg, f_deg, 2) == y_idx


def test_select_pivot_x_even_degree_half_attained():
    decomp, j_deg, f_deg, x_idx, _ = _pivot_fixture(3, xj=1, xf=2, yj=0, yf=9)
    assert select_pivot_z(decomp, j_deg, f_deg, 3) == x_idx


def test_select_pivot_aborts_when_no_candidate_qualifies():
    decomp, j_deg, f_deg, _, _ = _pivot_fixture(2, xj=1, xf=4, yj=0, yf=3)
    with pytest.raises(CounterexampleError):
        select_pivot_z(decomp, j_deg, f_deg, 2)


def test_select_pivot_validates_case_preconditions():
    decomp, j_deg, f_deg, _, _ = _pivot_fixture(2, xj=2, xf=4, yj=1, yf=3)
    with pytest.raises(ValueError):
        select_pivot_z(decomp, j_deg, f_deg, 3)  # parity imbalance is -2, not +2
    with pytest.raises(ValueError):
        select_pivot_z(decomp, j_deg, f_deg, 1)


def test_verify_certificate_on_fresh_outputs(rng):
    for _ in range(25):
        pi = random_graphic_sequence(rng, rng.randint(1, 10))
        cert = build_realization(pi)
        assert verify_certificate(cert, pi)


def test_verify_certificate_relabeled_triangle():
    g = build_graph(3, [(1, 2), (2, 3), (1, 3)])
    h = max_bisection(g, Bipartition((1, 2, 1)))
    cert = RealizationCertificate(
        graph=g, bisection=h, slacks=tuple(bisection_slack(g, h))
    )
    assert verify_certificate(cert, (2, 2, 2))


def test_verify_certificate_rejects_corruption():
    pi = (2, 2, 2)
    cert = build_realization(pi)
    assert not verify_certificate(cert, (2, 2, 1))
    bad = dataclasses.replace(cert, slacks=(99,) * 3)
    assert not verify_certificate(bad, pi)


def test_join_graph_clique_heavy_bisection_has_negative_slack():
    """Forcing the whole clique onto one side starves an independent vertex."""
    g = _join_graph()
    h = max_bisection(g, Bipartition.from_v1(8, [4, 5, 6, 7]))
    assert min(bisection_slack(g, h)) < 0


def test_per_step_invariants_across_many_sequences(rng):
    """Structural guarantees checked at every reduction level."""
    seqs = [random_graphic_sequence(rng, rng.randint(3, 14)) for _ in range(40)]
    seqs.append(degree_sequence(_join_graph()))
    for pi in seqs:
        _, records = reduction_trace(pi)
        for rec in records:
            d = rec.decomp
            assert len(d.x1) % 2 == 0
            assert len(d.x1) + 2 * len(d.x2) == 2 * rec.K
            assert rec.epsilon == (1 if rec.K == rec.k - 1 else 0)
            odd1 = sum(1 for i in d.x1 if i % 2 == 1)
            assert odd1 - (len(d.x1) - odd1) in (-2, 0, 2)
            odd2 = sum(1 for i in d.x2 if i % 2 == 1)
            x2diff = (len(d.x2) - odd2) - odd2
            if rec.case == 1:
                assert -1 <= x2diff <= 1
            elif rec.case == 2:
                assert -2 <= x2diff <= -1
            else:
                assert 0 <= x2diff <= 1
            assert len(rec.omega_pp) == rec.n - 2


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_small_lengths(n):
    realizable = degree_sequence_set(n)
    for pi in all_nonincreasing_tuples(n, max(n - 1, 0)):
        if pi in realizable:
            assert verify_certificate(build_realization(pi), pi)
