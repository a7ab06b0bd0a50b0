import numpy as np
import pytest

from pyspecenergy.errors import BadEpsilon, EmptySet
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Sets.constructors import mult_subgroup, random_set
from pyspecenergy.Sets.fpset import FpSet
from pyspecenergy.Spectral.fourier import (
    balanced_mag2,
    chirp_dft,
    dft_direct,
    dft_fast,
    fourier_table,
    max_over_sqrt_p,
    spectrum,
    spectrum_size_bound,
)


def test_full_field_and_point_mass():
    field = make_field(7)
    full = dft_direct(field, FpSet(7, range(7)))
    assert full.values[0] == 7
    assert np.allclose(full.values[1:], 0, atol=1e-12)
    point = dft_direct(field, FpSet(7, [0]))
    assert np.allclose(point.values, 1)


def test_quadratic_residues_are_flat():
    table = dft_direct(make_field(7), FpSet(7, [1, 2, 4]))
    assert np.allclose(table.mag2[1:], 2)
    assert table.max_nonzero_magnitude() == pytest.approx(np.sqrt(2))


def test_matches_numpy_convention():
    field = make_field(13)
    A = FpSet(13, [0, 3, 4, 9])
    table = dft_direct(field, A)
    assert np.allclose(table.values, np.fft.fft(A.indicator()), atol=1e-12)


def test_conjugate_symmetry_is_exact():
    field = make_field(101)
    table = dft_fast(field, random_set(field, 30, seed=2))
    assert np.array_equal(table.mag2[1:], table.mag2[1:][::-1])
    assert table.values[0] == 30


@pytest.mark.parametrize("p", [101, 211, 421, 1009])
def test_parseval(p):
    field = make_field(p)
    rng = np.random.default_rng(p)
    for seed in range(50):
        A = random_set(field, int(rng.integers(0, p + 1)), seed=seed)
        assert dft_direct(field, A).parseval_defect() <= 1e-9
        assert dft_fast(field, A).parseval_defect() <= 1e-9


@pytest.mark.parametrize("p", [7, 13, 101, 211, 421, 1009, 4999])
def test_fast_matches_direct(p):
    field = make_field(p)
    sets = [FpSet(p, [0]), FpSet(p, range(p)), mult_subgroup(field, (p - 1) // 2)]
    sets += [random_set(field, size, seed=size) for size in (1, p // 10, p // 3, p - 1)]
    for A in sets:
        err = np.max(np.abs(dft_fast(field, A).values - dft_direct(field, A).values))
        assert err < 1e-6


def test_chirp_dft_against_numpy():
    x = np.random.default_rng(0).standard_normal(37) + 0j
    assert np.allclose(chirp_dft(x), np.fft.fft(x), atol=1e-9)
    with pytest.raises(ValueError):
        chirp_dft(np.zeros((2, 2)))


def test_fourier_table_methods():
    small, large = make_field(101), make_field(10007)
    A = FpSet(101, [1, 5])
    assert np.allclose(fourier_table(small, A).values, fourier_table(small, A, "fast").values)
    B = random_set(large, 50, seed=0)
    assert fourier_table(large, B).parseval_defect() <= 1e-9
    with pytest.raises(ValueError):
        fourier_table(small, A, "rader")


@pytest.mark.parametrize(
    "members, eps, expected",
    [
        (range(7), 0.5, (0,)),
        ([1, 2, 4], 0.4, tuple(range(7))),
        ([1, 2, 4], 0.5, (0,)),
    ],
)
def test_spectrum_examples(members, eps, expected):
    field = make_field(7)
    result = spectrum(dft_direct(field, FpSet(7, members)), eps)
    assert result.elements == expected
    assert 0 in result.elements


def test_spectrum_symmetric_and_bounded():
    field = make_field(211)
    A = random_set(field, 40, seed=5)
    table = dft_direct(field, A)
    for eps in (0.1, 0.25, 0.5):
        result = spectrum(table, eps)
        members = set(result.elements)
        assert members == {(-r) % 211 for r in members}
        assert len(result) <= spectrum_size_bound(table, eps)
        assert set(result.nonzero()) == members - {0}


def test_spectrum_errors():
    field = make_field(7)
    table = dft_direct(field, FpSet(7, [1]))
    for eps in (0.0, 1.5, -0.1):
        with pytest.raises(BadEpsilon):
            spectrum(table, eps)
    with pytest.raises(EmptySet):
        spectrum(dft_direct(field, FpSet(7, [])), 0.5)


def test_balanced_mag2_and_max_ratio():
    field = make_field(7)
    table = dft_direct(field, FpSet(7, [0]))
    mag2 = balanced_mag2(table)
    assert mag2[0] == 0 and mag2[1] == pytest.approx(1)
    H = mult_subgroup(make_field(101), 25)
    ratio = max_over_sqrt_p(dft_direct(make_field(101), H))
    assert 0 < ratio < 2


def test_csv_export(tmp_path):
    field = make_field(7)
    table = dft_direct(field, FpSet(7, [1, 2, 4]))
    path = tmp_path / "t.csv"
    table.write_csv(str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "xi,re,im,mag2"
    assert lines[1] == "0,3,0,9"
    assert len(lines) == 8
    spec_path = tmp_path / "s.csv"
    spectrum(table, 0.4).write_csv(str(spec_path))
    assert len(spec_path.read_text().splitlines()) == 8
