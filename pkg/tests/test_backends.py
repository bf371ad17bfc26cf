"""Differential tests between the compiled kernel core and the pure twin."""

import os
import random
import subprocess
import sys

import pytest

from sincsum import _kernels_py as pure

compiled = pytest.importorskip(
    "sincsum._kernels_cy", reason="compiled kernel extension not built"
)


class TestDifferential:
    def test_names(self):
        assert pure.backend_name() == "python"
        assert compiled.backend_name() == "compiled"

    def test_slack_constant_matches(self):
        assert pure.FLOAT_SLACK == compiled.FLOAT_SLACK

    def test_scalar_kernels_agree(self):
        rng = random.Random(11)
        for _ in range(2000):
            x = -30.0 + 60.0 * rng.random()
            assert pure.sinc(x) == pytest.approx(compiled.sinc(x), abs=1e-16)
            assert pure.sinc_sq(x) == pytest.approx(compiled.sinc_sq(x), abs=1e-16)
            assert pure.dsinc(x) == pytest.approx(compiled.dsinc(x), abs=1e-15)

    def test_integer_zeros_preserved(self):
        for m in (1.0, -2.0, 7.0):
            assert compiled.sinc(m) == 0.0
            assert pure.sinc(m) == 0.0

    def test_zeta_agrees(self):
        rng = random.Random(12)
        for _ in range(500):
            s = 1.01 + 20.0 * rng.random()
            a = 0.05 + 1.95 * rng.random()
            vp, gp = pure.zeta_em(s, a)
            vc, gc = compiled.zeta_em(s, a)
            assert vp == pytest.approx(vc, rel=1e-15)
            assert gp == pytest.approx(gc, rel=1e-12, abs=1e-300)

    def test_power_sum_routes_agree(self):
        rng = random.Random(13)
        for _ in range(500):
            r = 0.6 + 8.0 * rng.random()
            x = rng.random()
            vp, bp = pure.power_sum_fixed(r, x, 16)
            vc, bc = compiled.power_sum_fixed(r, x, 16)
            assert vp == pytest.approx(vc, rel=1e-14, abs=1e-15)
            assert bp == pytest.approx(bc, rel=1e-12)
            assert pure.power_sum_zeta(r, x) == pytest.approx(
                compiled.power_sum_zeta(r, x), rel=1e-14, abs=1e-15
            )
            if 0.0 < x < 1.0:
                dp = pure.power_sum_deriv(r, x)
                dc = compiled.power_sum_deriv(r, x)
                assert dp == pytest.approx(dc, rel=1e-11, abs=1e-12)


class TestSelection:
    def test_selection_honors_environment(self):
        import sincsum

        forced = os.environ.get("SINCSUM_BACKEND", "auto").strip().lower()
        if forced in ("python", "pure"):
            assert sincsum.BACKEND == "python"
        else:
            # compiled module imported fine above, so auto must pick it
            assert sincsum.BACKEND == "compiled"

    def test_env_forces_pure(self):
        env = dict(os.environ, SINCSUM_BACKEND="python")
        out = subprocess.run(
            [sys.executable, "-c", "import sincsum; print(sincsum.BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "python"

    def test_unknown_backend_rejected(self):
        env = dict(os.environ, SINCSUM_BACKEND="fortran")
        out = subprocess.run(
            [sys.executable, "-c", "import sincsum"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert out.returncode != 0
