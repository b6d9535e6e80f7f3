import numpy as np
import pytest

from rabipackets.errors import InvalidParameterError, InvalidStateError
from rabipackets.grid import build_grid
from rabipackets.observables import populations, record
from rabipackets.states import (
    TwoLevelState,
    assemble_state,
    gaussian_amplitudes,
    load_tabulated,
    norm,
    normalize,
    tabulated_amplitudes,
)


def test_gaussian_symmetric_and_peaked(packet_grid):
    amp = gaussian_amplitudes(packet_grid, 0.0, 1.0)
    assert np.all(amp.imag == 0) and np.all(amp.real > 0)
    np.testing.assert_allclose(amp, amp[::-1], rtol=1e-12)
    assert abs(packet_grid.points[np.argmax(abs(amp))]) <= packet_grid.dp


def test_gaussian_translation(packet_grid):
    amp = gaussian_amplitudes(packet_grid, 3.0, 1.0)
    j = np.argmax(abs(amp))
    assert j == np.argmin(abs(packet_grid.points - 3.0))


def test_excited_packet_sampled_on_shifted_axis(packet_grid):
    amp = gaussian_amplitudes(packet_grid, 3.0, 1.0, level="excited")
    j = np.argmax(abs(amp))
    assert j == np.argmin(abs(packet_grid.points + 1.0 - 3.0))


def test_gaussian_sigma_is_density_width():
    g = build_grid(0, 30, 6001)
    state = assemble_state(g, gaussian_amplitudes(g, 0.0, 2.5))
    variance = np.sum(g.weights * abs(state.a) ** 2 * g.points**2)
    assert variance == pytest.approx(2.5**2, rel=1e-10)


def test_gaussian_rejects_bad_sigma(packet_grid):
    with pytest.raises(InvalidParameterError):
        gaussian_amplitudes(packet_grid, 0.0, 0.0)


def test_one_level_assembly(one_level_state):
    n_g, n_e = populations(one_level_state)
    assert n_g == pytest.approx(1.0, abs=1e-12) and n_e == 0.0
    assert one_level_state.tau == 0.0


def test_shifted_two_level_assembly(two_level_state):
    n_g, n_e = populations(two_level_state)
    assert n_g == pytest.approx(0.5, abs=1e-12)
    assert n_e == pytest.approx(0.5, abs=1e-12)


def test_definite_momentum_state():
    g = build_grid(2.0, 0, 1)
    state = assemble_state(g, np.ones(1))
    assert populations(state) == (1.0, 0.0)
    assert record(state).p_norm_g == 2.0


def test_assemble_rejects_empty(packet_grid):
    with pytest.raises(InvalidStateError):
        assemble_state(packet_grid)
    with pytest.raises(InvalidStateError):
        assemble_state(packet_grid, np.zeros(packet_grid.n_points))


def test_normalize_examples(packet_grid):
    state = assemble_state(packet_grid, gaussian_amplitudes(packet_grid, 0, 1))
    doubled = TwoLevelState(packet_grid, state.a * np.sqrt(2), state.b)
    assert norm(doubled) == pytest.approx(2.0, rel=1e-14)
    assert abs(norm(normalize(doubled)) - 1) <= 1e-12
    again = normalize(state)
    assert np.max(abs(again.a - state.a)) <= 1e-15
    with pytest.raises(InvalidStateError):
        normalize(TwoLevelState(packet_grid, state.a * 0, state.b))


def test_shape_mismatch(packet_grid):
    with pytest.raises(InvalidStateError):
        TwoLevelState(packet_grid, np.zeros(3), np.zeros(3))


def test_weights_homogeneous(packet_grid):
    g_amp = gaussian_amplitudes(packet_grid, 0, 2)
    e_amp = gaussian_amplitudes(packet_grid, 4, 1, level="excited")
    s1 = assemble_state(packet_grid, g_amp, e_amp, 1.0, 0.5j)
    factor = 3.0 - 4.0j
    s2 = assemble_state(packet_grid, g_amp, e_amp, factor * 1.0, factor * 0.5j)
    phase = factor / abs(factor)
    np.testing.assert_allclose(s2.a, phase * s1.a, atol=1e-14)
    np.testing.assert_allclose(s2.b, phase * s1.b, atol=1e-14)
    r1, r2 = record(s1), record(s2)
    assert r1.n_g == pytest.approx(r2.n_g, abs=1e-14)
    assert r1.p_mean_e == pytest.approx(r2.p_mean_e, abs=1e-13)


def test_tabulated_resampling(tmp_path, packet_grid):
    p = np.linspace(-5, 5, 11)
    table = np.column_stack([p, 1 - abs(p) / 5, 0.5 * np.ones_like(p)])
    path = tmp_path / "amp.txt"
    np.savetxt(path, table, header="p re im")
    loaded = load_tabulated(path)
    amp = tabulated_amplitudes(packet_grid, loaded)
    inside = abs(packet_grid.points) <= 5
    np.testing.assert_allclose(amp.real[inside], 1 - abs(packet_grid.points[inside]) / 5, atol=1e-12)
    assert np.all(amp[~inside] == 0)
    shifted = tabulated_amplitudes(packet_grid, loaded, level="excited")
    j = np.argmin(abs(packet_grid.points + 1.0))
    assert shifted.real[j] == pytest.approx(1.0, abs=1e-2)


def test_tabulated_rejects_bad_table(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n1 2\n")
    with pytest.raises(InvalidParameterError):
        load_tabulated(path)
    path.write_text("1 0 0\n0 1 0\n")
    with pytest.raises(InvalidParameterError):
        load_tabulated(path)
