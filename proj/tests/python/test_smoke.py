import json
import math

import numpy as np
import pytest

import radwave


def small_config(**kw):
    cfg = radwave.RunConfig()
    cfg.u0 = radwave.DataFamily(radwave.Shape.Bump, 1.0, 1.0, 6)
    cfg.u1 = radwave.DataFamily(radwave.Shape.Bump, 0.0, 1.0, 6)
    cfg.r_max = 8.0
    cfg.n = 513
    cfg.t_final = 2.0
    for k, v in kw.items():
        setattr(cfg, k, v)
    return cfg


def test_run_completes_and_haraux_does_not_grow():
    res = radwave.run(small_config())
    assert res["status"] == "completed"
    h = res["monitors"]["haraux_max"]
    assert len(h) == len(res["monitors"]["t"]) > 2
    assert np.all(np.diff(h) <= 1e-12 * h[0])
    assert res["snapshots"][-1]["t"] == pytest.approx(2.0)


def test_channel_names_match_monitor_keys():
    res = radwave.run(small_config(t_final=0.5))
    assert set(radwave.channel_names()) | {"t"} == set(res["monitors"].keys())


def test_zero_data_stays_zero():
    res = radwave.run(small_config(u0=radwave.DataFamily(radwave.Shape.Bump, 0.0, 1.0, 6)))
    last = res["snapshots"][-1]
    assert not np.any(last["w"]) and not np.any(last["xp"])


def test_config_text_round_trip():
    cfg = small_config(p=5.0, seed=7)
    back = radwave.RunConfig.from_text(cfg.to_text())
    assert back == cfg


def test_errors_map_to_python_exceptions():
    with pytest.raises(radwave.DomainTooSmall):
        radwave.run(small_config(t_final=20.0))
    with pytest.raises(radwave.ConfigError):
        radwave.RunConfig.from_text("[scheme]\nbogus = 1\n")
    with pytest.raises(radwave.ValidationError):
        radwave.DataFamily(radwave.Shape.Bump, 1.0, -1.0, 6)
    assert issubclass(radwave.DomainTooSmall, radwave.Error)


def test_scaling_helpers():
    for p in (2.5, 3.0, 5.0):
        for k in (1, 2, 3):
            assert radwave.scaling_exponent(p, k) == pytest.approx(k - radwave.critical_index(p))
    r = np.linspace(0.0, 4.0, 2049)
    u = np.where(r < 1.0, (1.0 - r**2) ** 6, 0.0)
    rep = radwave.verify_scaling(u, 4.0, 1.0, 3.0, 1)
    assert rep["residual"] < 1e-12


def test_inequality_checks_on_arrays():
    r = np.linspace(0.0, 8.0, 4097)
    f = np.where(r < 2.0, (1.0 - (r / 2.0) ** 2) ** 6, 0.0)
    assert 0.0 < radwave.hardy_check(f, 8.0) < 2.0
    assert 0.0 < radwave.strauss_check(f, 8.0) < 1.0 / math.sqrt(4.0 * math.pi)
    assert radwave.hardy_check(np.zeros(33), 1.0) == 0.0


def test_run_to_directory_writes_reports(tmp_path):
    code = radwave.run_to_directory(small_config(t_final=0.5), str(tmp_path))
    assert code == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["status"] == "completed"
    header = (tmp_path / "monitors.csv").read_text().splitlines()[0]
    assert header.startswith("t,")
