import math
from fractions import Fraction

import pytest

from fareylattice.bench import ALGOS, BenchRecord, fit_exponent, golden_x, run_grid, to_csv


class TestGoldenX:
    def test_first_convergents(self):
        assert golden_x(1) == Fraction(1, 2)
        assert golden_x(2) == Fraction(2, 3)
        assert golden_x(3) == Fraction(3, 5)

    def test_default_is_deep_and_below_one(self):
        x = golden_x()
        assert 0 < x < 1
        assert abs(float(x) - (math.sqrt(5) - 1) / 2) < 1e-12

    def test_continued_fraction_is_all_ones(self):
        x = golden_x(20)
        quotients = []
        while x:
            inv = 1 / x
            quotients.append(inv.numerator // inv.denominator)
            x = inv - quotients[-1]
        assert all(q == 1 for q in quotients[:-1])

    def test_rejects_bad_depth(self):
        with pytest.raises(ValueError):
            golden_x(0)


class TestBenchRecord:
    def test_valid(self):
        rec = BenchRecord(algo="brute", n=100, reps=3, median_ns=1234)
        assert rec.median_ns == 1234

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(algo="brute", n=100, reps=2, median_ns=10),
            dict(algo="brute", n=100, reps=3, median_ns=0),
            dict(algo="brute", n=0, reps=3, median_ns=10),
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            BenchRecord(**kwargs)


class TestRunGrid:
    def test_known_algorithms(self):
        assert set(ALGOS) == {"brute", "pawlewicz", "improved"}

    def test_small_real_grid(self):
        sizes = [100, 400, 1600, 6400, 25600]
        records = run_grid("improved", sizes, reps=3)
        assert [r.n for r in records] == sizes
        assert all(r.algo == "improved" and r.reps == 3 for r in records)
        assert all(r.median_ns > 0 for r in records)

    def test_explicit_x(self):
        records = run_grid("brute", [10, 40, 200, 1000], reps=3, x=Fraction(1, 2))
        assert len(records) == 4

    @pytest.mark.parametrize(
        "algo,sizes,reps",
        [
            ("nope", [10, 40, 200, 1000], 3),
            ("brute", [10, 40, 200], 3),
            ("brute", [10, 40, 40, 1000], 3),
            ("brute", [10, 40, 200, 1000], 2),
            ("brute", [10, 20, 40, 80], 3),  # span under two decades
        ],
    )
    def test_rejects(self, algo, sizes, reps):
        with pytest.raises(ValueError):
            run_grid(algo, sizes, reps=reps)


class TestFitExponent:
    def test_linear(self):
        records = [
            BenchRecord(algo="brute", n=16**k, reps=3, median_ns=7 * 16**k)
            for k in range(1, 7)
        ]
        assert abs(fit_exponent(records) - 1.0) < 1e-9

    def test_three_quarters(self):
        # n = 16^k makes n^(3/4) = 8^k exact in integers
        records = [
            BenchRecord(algo="brute", n=16**k, reps=3, median_ns=5 * 8**k)
            for k in range(1, 8)
        ]
        assert abs(fit_exponent(records) - 0.75) < 1e-6

    def test_two_thirds(self):
        records = [
            BenchRecord(algo="brute", n=64**k, reps=3, median_ns=3 * 16**k)
            for k in range(1, 7)
        ]
        assert abs(fit_exponent(records) - Fraction(2, 3)) < 1e-6

    def test_refuses_short_series(self):
        records = [
            BenchRecord(algo="brute", n=16**k, reps=3, median_ns=8**k)
            for k in range(1, 4)
        ]
        with pytest.raises(ValueError):
            fit_exponent(records)


class TestToCsv:
    def test_shape(self):
        records = [
            BenchRecord(algo="improved", n=100, reps=3, median_ns=1111),
            BenchRecord(algo="improved", n=10000, reps=3, median_ns=22222),
        ]
        text = to_csv(records)
        lines = text.strip().splitlines()
        assert lines[0] == "algo,n,reps,median_ns"
        assert lines[1] == "improved,100,3,1111"
        assert lines[2] == "improved,10000,3,22222"
