import json

import numpy as np
import pytest

from nide.bench import (
    ExperimentConfig,
    MC_CHECKS,
    main,
    mc_validate,
    normalized_mse,
    run_experiment,
)
from nide.noise_model import NoiseSpec


class TestNormalizedMse:
    def test_perfect_estimate(self):
        x = np.arange(1.0, 9.0)
        assert normalized_mse(x, x) == 0.0

    def test_zero_estimate_is_unity(self):
        x = np.arange(1.0, 9.0)
        assert normalized_mse(np.zeros_like(x), x) == pytest.approx(1.0)

    def test_doubled_estimate_is_unity(self):
        x = np.arange(1.0, 9.0)
        assert normalized_mse(2 * x, x) == pytest.approx(1.0)

    def test_norm_denominator_flag(self):
        x = np.arange(1.0, 9.0)
        norm = np.linalg.norm(x)
        assert normalized_mse(np.zeros_like(x), x, "norm") == pytest.approx(norm)

    def test_validation(self):
        with pytest.raises(ValueError):
            normalized_mse(np.ones(3), np.ones(4))
        with pytest.raises(ValueError):
            normalized_mse(np.ones(3), np.zeros(3))
        with pytest.raises(ValueError):
            normalized_mse(np.ones(3), np.ones(3), "rms")


class TestRunExperiment:
    def test_single_trial_matches_hand_run(self):
        from nide.denoise import DenoiseConfig, denoise
        from nide.noise_model import gen_noise
        from nide.signals import gen_signal

        config = ExperimentConfig(
            signals=("blocks",), snr_db=(8.0,), methods=("nide",), trials=1, seed=3
        )
        result = run_experiment(config)
        assert len(result.rows) == 1
        row = result.rows[0]

        truth = gen_signal("blocks", 2048).samples
        raw = gen_noise(NoiseSpec.white(), 2048, _first_trial_seed(3))
        scale = np.linalg.norm(truth) * 10 ** (-8.0 / 20) / np.linalg.norm(raw)
        denoised = denoise(truth + raw * scale, DenoiseConfig()).denoised
        assert row.mean_mse == pytest.approx(normalized_mse(denoised, truth))
        assert row.std_mse == 0.0

    def test_monotone_in_snr_for_every_signal_and_method(self):
        config = ExperimentConfig(
            signals=("blocks", "bumps", "heavysine", "doppler", "quadchirp", "mishmash"),
            snr_db=(1.0, 14.0),
            methods=("nide", "visu", "sure", "bayes"),
            trials=6,
            seed=1,
        )
        result = run_experiment(config)
        for row in result.rows:
            assert row.mean_mse >= 0
            assert row.std_mse >= 0
        for signal in config.signals:
            for method in config.methods:
                low = result.mean_mse(signal, method, 1.0)
                high = result.mean_mse(signal, method, 14.0)
                assert high < low, (signal, method)

    def test_accepts_historical_signal_spelling(self):
        config = ExperimentConfig(signals=("HeaviSine",), snr_db=(8.0,))
        assert config.signals == ("heavysine",)

    def test_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(signals=("nope",), snr_db=(1.0,))
        with pytest.raises(ValueError):
            ExperimentConfig(signals=("blocks",), snr_db=(1.0,), methods=("fancy",))
        with pytest.raises(ValueError):
            ExperimentConfig(signals=("blocks",), snr_db=(1.0,), trials=0)
        with pytest.raises(ValueError):
            ExperimentConfig(signals=("blocks",), snr_db=(1.0,), sigma_policy="oracle")

    def test_csv_and_json_outputs(self, tmp_path):
        config = ExperimentConfig(
            signals=("blocks",), snr_db=(8.0,), methods=("nide", "visu"), trials=2, seed=0
        )
        result = run_experiment(config)
        csv_path = tmp_path / "rows.csv"
        json_path = tmp_path / "rows.json"
        result.to_csv(csv_path)
        result.to_json(json_path)
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "signal,method,snr_db,noise,mean_mse,std_mse,trials"
        assert len(lines) == 3
        payload = json.loads(json_path.read_text())
        assert payload[0]["signal"] == "blocks"
        assert set(payload[0]) == {
            "signal", "method", "snr_db", "noise", "mean_mse", "std_mse", "trials",
        }

    def test_determinism_byte_identical(self, tmp_path):
        config = ExperimentConfig(
            signals=("blocks", "doppler"),
            snr_db=(4.0, 8.0),
            methods=("nide", "visu"),
            noise=NoiseSpec.ar1(0.8),
            trials=3,
            seed=11,
        )
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_experiment(config).to_csv(a)
        run_experiment(config).to_csv(b)
        assert a.read_bytes() == b.read_bytes()


def _first_trial_seed(seed):
    ss = np.random.SeedSequence([seed, 0])
    return int(ss.generate_state(1, np.uint64)[0])


class TestMcValidate:
    @pytest.mark.parametrize("check", MC_CHECKS[:3])
    def test_moment_checks_pass(self, check):
        report = mc_validate(check, {"n": 512}, runs=400, seed=0)
        assert report.passed, report.text()

    def test_indicator_alias_specializes_to_sorted_noise(self):
        a = mc_validate("appendixA", {"n": 512, "signature": "indicator"}, runs=300, seed=5)
        b = mc_validate("appendixB", {"n": 512}, runs=300, seed=5)
        assert a.passed and b.passed
        for ra, rb in zip(a.rows, b.rows):
            assert ra["mc_mean"] == rb["mc_mean"]
            assert ra["analytic_mean"] == rb["analytic_mean"]

    def test_colored_bound_check(self):
        report = mc_validate(
            "appendixD", {"n": 512, "grid_points": 25}, runs=300, seed=1
        )
        assert report.passed, report.text()

    def test_coverage_check_in_clt_region(self):
        report = mc_validate(
            "coverage", {"n": 2048, "z_max": 3.0, "grid_points": 15}, runs=1000, seed=2
        )
        assert report.passed, report.text()

    def test_aliases_and_unknown(self):
        report = mc_validate("sorted-noise", {"n": 256}, runs=200, seed=0)
        assert report.check == "appendixB"
        with pytest.raises(ValueError):
            mc_validate("appendixZ")


class TestCli:
    def test_bench_roundtrip(self, tmp_path):
        out = tmp_path / "table.csv"
        rc = main([
            "bench", "--signal", "blocks", "--method", "nide,visu", "--snr", "8",
            "--trials", "2", "--seed", "4", "--out", str(out),
        ])
        assert rc == 0
        assert out.read_text().startswith("signal,method,snr_db")

    def test_bench_json(self, tmp_path):
        out = tmp_path / "table.json"
        rc = main([
            "bench", "--signal", "blocks", "--method", "nide", "--snr", "8",
            "--trials", "1", "--out", str(out), "--format", "json",
        ])
        assert rc == 0
        assert json.loads(out.read_text())[0]["method"] == "nide"

    def test_trace_columns(self, tmp_path):
        out = tmp_path / "trace.csv"
        rc = main([
            "trace", "--signal", "blocks", "--snr", "5", "--seed", "2",
            "--out", str(out),
        ])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "z,empirical,lower,upper"
        assert len(lines) == 1 + 2048 - 64

    def test_trace_shows_departure(self, tmp_path):
        # noisy sparse data must leave the noise band somewhere
        out = tmp_path / "trace.csv"
        main(["trace", "--signal", "blocks", "--snr", "5", "--seed", "2", "--out", str(out)])
        rows = np.loadtxt(out, delimiter=",", skiprows=1)
        z, g, lower, upper = rows.T
        assert np.any(g < lower)

    def test_trace_with_colored_noise(self, tmp_path):
        out = tmp_path / "trace.csv"
        rc = main([
            "trace", "--signal", "blocks", "--snr", "8", "--seed", "2",
            "--noise", "ar1:0.8", "--sigma-policy", "known", "--out", str(out),
        ])
        assert rc == 0
        rows = np.loadtxt(out, delimiter=",", skiprows=1)
        assert np.all(rows[:, 2] <= rows[:, 3])  # lower <= upper

    def test_mc_exit_codes(self, tmp_path):
        assert main(["mc", "--check", "appendixB", "--runs", "200", "--n", "512"]) == 0
        report = tmp_path / "mc.json"
        rc = main([
            "mc", "--check", "coverage", "--runs", "300", "--n", "2048",
            "--z", "0.5,1.0,2.0,4.0", "--out", str(report),
        ])
        # includes z = 4 sigma where the normal approximation under-covers
        payload = json.loads(report.read_text())
        assert payload["check"] == "coverage"

    def test_lambda_sweep(self, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main([
            "lambda-sweep", "--signal", "blocks", "--snr", "8", "--trials", "2",
            "--lambdas", "4,4.5", "--out", str(out),
        ])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "lambda,mean_mse,std_mse"
        assert len(lines) == 3

    def test_denoise_file_reject_and_pad(self, tmp_path, capsys):
        infile = tmp_path / "in.csv"
        np.savetxt(infile, np.random.default_rng(0).normal(size=100))
        out = tmp_path / "out.csv"
        rc = main([
            "denoise-file", "--in", str(infile), "--out", str(out), "--levels", "3",
        ])
        assert rc == 2  # non-dyadic input rejected by default
        rc = main([
            "denoise-file", "--in", str(infile), "--out", str(out), "--levels", "3",
            "--pad", "zero",
        ])
        assert rc == 0
        values = np.loadtxt(out)
        assert values.size == 100
        sidecar = json.loads((tmp_path / "out.json").read_text())
        assert set(sidecar) == {"threshold", "sigma_used", "lambda"}

    def test_denoise_file_dyadic_roundtrip(self, tmp_path):
        from nide.signals import gen_signal

        infile = tmp_path / "sig.csv"
        truth = gen_signal("heavysine", 256).samples
        noisy = truth + np.random.default_rng(1).normal(0, 1.0, 256)
        np.savetxt(infile, noisy)
        out = tmp_path / "den.csv"
        rc = main(["denoise-file", "--in", str(infile), "--out", str(out)])
        assert rc == 0
        denoised = np.loadtxt(out)
        assert np.sum((denoised - truth) ** 2) < np.sum((noisy - truth) ** 2)
