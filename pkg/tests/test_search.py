import numpy as np
import pytest

from hlconst._search import golden_max, grid_max, local_max_mask


def test_golden_max_many_brackets():
    centers = np.array([0.1, 0.37, 0.9])
    f = lambda x: -(x - centers) ** 2
    x, v = golden_max(f, centers - 0.3, centers + 0.2, xtol=1e-12)
    assert np.allclose(x, centers, atol=1e-11)


def test_golden_max_handles_kink():
    x, _ = golden_max(lambda x: -np.abs(x - 0.3), np.array([0.0]), np.array([1.0]), 1e-13)
    assert x[0] == pytest.approx(0.3, abs=1e-12)


def test_grid_max_finds_global_peak_among_several():
    f = lambda x: np.sin(7 * x) + 0.5 * x
    x, v = grid_max(f, 0.0, 3.0, 301)
    dense = np.linspace(0, 3, 3_000_001)
    assert v >= f(dense).max() - 1e-13
    assert x == pytest.approx(dense[np.argmax(f(dense))], abs=1e-6)


def test_grid_max_endpoint():
    assert grid_max(lambda x: x, 0.0, 1.0, 11) == (1.0, 1.0)


def test_local_max_mask_periodic_wraps():
    v = np.array([3.0, 1.0, 2.0, 1.0, 2.5])
    assert local_max_mask(v, periodic=True).tolist() == [True, False, True, False, False]
    assert local_max_mask(v).tolist() == [True, False, True, False, True]
