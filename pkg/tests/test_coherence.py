from math import log2, sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruh_coherence import (
    Bipartition,
    NumericError,
    basis_independent_coherence,
    closed_form_coherence,
    closed_form_density,
    closed_form_mix_entropy,
    closed_form_state_entropy,
    coherence_report,
    frozen_coherence_constant,
    l1_coherence,
    reduced_density,
)
from unruh_coherence import coherence as coh

from conftest import rand_density, rand_unitary
from test_unruh import analytic_matrix

GRID = np.linspace(0, np.pi / 4, 101)


def H(ps):
    """Shannon entropy in bits of an explicit probability list."""
    return -sum(p * log2(p) for p in ps if p > 0)


# hand spectra: (Bell + I/4)/2 -> {5/8, 1/8, 1/8, 1/8}; Bell -> {1}
C_ABI_0 = sqrt(H([5 / 8, 1 / 8, 1 / 8, 1 / 8]) - (0 + 2) / 2)
# diag(1/2,0,1/2,0): mixture {3/8,1/8,3/8,1/8}, state {1/2,1/2}
C_ABII_0 = sqrt(H([3 / 8, 1 / 8, 3 / 8, 1 / 8]) - (1 + 2) / 2)
# r = pi/4, AB_I: mixture {1/2,1/4,1/8,1/8}, state {3/4,1/4}
C_ABI_END = sqrt(H([1 / 2, 1 / 4, 1 / 8, 1 / 8]) - (H([3 / 4, 1 / 4]) + 2) / 2)
FROZEN = sqrt(-(3 / 4) * (1 + log2(3 / 8)))


def test_hand_oracles_are_sane():
    assert C_ABI_0 == pytest.approx(0.7408070, abs=1e-7)
    assert C_ABII_0 == pytest.approx(0.5579230, abs=1e-7)
    assert C_ABI_END == pytest.approx(0.5868227, abs=1e-7)
    assert FROZEN == pytest.approx(C_ABII_0, abs=1e-15)


def test_maximally_mixed_has_zero_coherence():
    assert basis_independent_coherence(np.eye(4) / 4) == 0.0


def test_bell_projector_coherence():
    assert basis_independent_coherence(reduced_density(0, Bipartition.AB_I)) == pytest.approx(C_ABI_0, abs=1e-12)
    assert basis_independent_coherence(reduced_density(0, Bipartition.AB_I)) == pytest.approx(0.7407, abs=5e-4)


@pytest.mark.parametrize("r", [0.0, 0.1, 0.3, 0.5, np.pi / 4])
def test_bi_bii_coherence_is_frozen_value(r):
    assert basis_independent_coherence(reduced_density(r, Bipartition.B_I_B_II)) == pytest.approx(FROZEN, abs=1e-10)


def test_frozen_constant():
    assert frozen_coherence_constant() == pytest.approx(0.5579230, abs=1e-6)
    assert abs(frozen_coherence_constant() - basis_independent_coherence(reduced_density(0, "B_I_B_II"))) <= 1e-10
    assert abs(frozen_coherence_constant() - basis_independent_coherence(reduced_density(0.3, "B_I_B_II"))) <= 1e-10


def test_pure_qubit_coherence(rng):
    # (|0><0| + I/2)/2 has spectrum {3/4, 1/4}
    expected = sqrt(H([3 / 4, 1 / 4]) - 0.5)
    assert basis_independent_coherence(np.diag([1.0, 0.0])) == pytest.approx(expected, abs=1e-12)
    for _ in range(10):
        u = rand_unitary(rng, 2)
        rho = u @ np.diag([1.0, 0.0]) @ u.conj().T
        assert basis_independent_coherence(rho) == pytest.approx(expected, abs=1e-9)


def test_radicand_guard():
    assert coh._coherence_from_entropies(1.0, 0.0, 2.0 + 1e-11) == 0.0
    with pytest.raises(NumericError):
        coh._coherence_from_entropies(1.0, 0.0, 2.1)


def test_l1_diagonal_is_zero(rng):
    assert l1_coherence(np.diag(rng.random(5))) == 0.0


@pytest.mark.parametrize("r", GRID[::10])
def test_l1_closed_forms(r):
    assert abs(l1_coherence(reduced_density(r, "AB_I")) - np.cos(r)) <= 1e-12
    assert abs(l1_coherence(reduced_density(r, "B_I_B_II")) - np.sin(r) * np.cos(r)) <= 1e-12


def test_l1_specific_values():
    assert l1_coherence(reduced_density(0, "AB_I")) == pytest.approx(1.0, abs=1e-15)
    assert l1_coherence(reduced_density(np.pi / 4, "B_I_B_II")) == pytest.approx(0.5, abs=1e-15)
    assert l1_coherence(reduced_density(0, "AB_II")) == 0.0


def test_closed_form_mix_entropy_values():
    assert closed_form_mix_entropy(np.pi / 4, "AB_I") == pytest.approx(1.75, abs=1e-12)
    assert closed_form_mix_entropy(0, "AB_II") == pytest.approx(3 / 4 - 2 * (3 / 8) * log2(3 / 8), abs=1e-12)
    assert closed_form_mix_entropy(0, "AB_II") == pytest.approx(1.8112781, abs=1e-7)
    assert closed_form_mix_entropy(0, "AB_I") == pytest.approx(1.5487949, abs=1e-7)
    assert closed_form_mix_entropy(0.4, "B_I_B_II") == pytest.approx(H([3 / 8, 3 / 8, 1 / 8, 1 / 8]), abs=1e-12)


def test_closed_form_state_entropy_values():
    assert closed_form_state_entropy(0, "AB_I") == 0.0
    assert closed_form_state_entropy(np.pi / 4, "AB_I") == pytest.approx(0.8112781, abs=1e-7)
    assert closed_form_state_entropy(0, "AB_II") == pytest.approx(1.0, abs=1e-15)
    assert closed_form_state_entropy(0.2, "B_I_B_II") == 1.0


def test_closed_form_density_matches_hand_copy():
    for r in GRID[::5]:
        for cut in Bipartition:
            assert np.array_equal(closed_form_density(r, cut), analytic_matrix(r, cut))


@pytest.mark.parametrize("cut", list(Bipartition))
def test_numeric_matches_closed_form_everywhere(cut):
    for r in GRID:
        rep = coherence_report(r, cut)
        assert abs(rep.c_basis_independent - closed_form_coherence(r, cut)) <= 1e-9
        assert abs(rep.s_rho - closed_form_state_entropy(r, cut)) <= 1e-9
        assert abs(rep.s_mix - closed_form_mix_entropy(r, cut)) <= 1e-9


def test_monotonicity_over_grid():
    c_abi = [closed_form_coherence(r, "AB_I") for r in GRID]
    c_abi_num = [basis_independent_coherence(reduced_density(r, "AB_I")) for r in GRID]
    c_abii_num = [basis_independent_coherence(reduced_density(r, "AB_II")) for r in GRID]
    c_bibii = [basis_independent_coherence(reduced_density(r, "B_I_B_II")) for r in GRID]
    assert np.all(np.diff(c_abi) <= 0)
    assert np.all(np.diff(c_abi_num) <= 0)
    assert np.all(np.diff(c_abii_num) >= 0)
    assert max(c_bibii) - min(c_bibii) <= 1e-10


def test_report_invariants():
    for r in GRID[::10]:
        for cut in Bipartition:
            rep = coherence_report(r, cut)
            assert 0 <= rep.c_basis_independent <= 1
            assert 0 <= rep.s_rho <= 2 and 0 <= rep.s_mix <= 2
            assert rep.s_mix >= (rep.s_rho + 2) / 2 - 1e-10
            assert rep.as_dict()["cut"] == cut.name


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.sampled_from([2, 3, 4, 8]), data=st.data())
def test_coherence_bounded_and_radicand_nonnegative(seed, d, data):
    rank = data.draw(st.integers(1, d))
    rho = rand_density(np.random.default_rng(seed), d, rank)
    s_rho, s_mix, log_d = coh._mixture_entropies(rho)
    assert s_mix >= (s_rho + log_d) / 2 - 1e-10
    assert 0 <= basis_independent_coherence(rho) <= 1


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.sampled_from([2, 4]))
def test_unitary_invariance(seed, d):
    rng = np.random.default_rng(seed)
    rho = rand_density(rng, d)
    u = rand_unitary(rng, d)
    rotated = u @ rho @ u.conj().T
    rotated = (rotated + rotated.conj().T) / 2
    assert abs(basis_independent_coherence(rotated) - basis_independent_coherence(rho)) <= 1e-9
