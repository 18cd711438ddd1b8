from __future__ import annotations

import json
import shutil
import subprocess

import pytest

NMBSIM = shutil.which("nmbsim")


@pytest.fixture(scope="session")
def reference_csvs(tmp_path_factory):
    """CSV files produced by the simulator CLI, one per schema.

    Regenerated through the real external interface so these tests track
    the producer's actual output format.
    """
    if NMBSIM is None:
        pytest.skip("nmbsim CLI not installed")
    root = tmp_path_factory.mktemp("reference")
    cfg = root / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "model": "model1",
                "alpha": 1.0,
                "n_bath": 40,
                "dt": 0.01,
                "t_final": 4.0,
                "occupancy_dt": 0.2,
                "outputs": ["entanglement", "nmbq", "energy", "occupancy"],
            }
        )
    )

    def run(*args):
        subprocess.run([NMBSIM, *args], check=True, capture_output=True)

    run("simulate", str(cfg), "--output-dir", str(root / "sim"))
    run("sweep", str(cfg), "--values", "0.2,1.0", "--output-dir", str(root / "sweep"))
    run("fidelity", str(cfg), "--r1", "4", "--r2", "0.1", "--output-dir", str(root / "fid"))
    return {
        "trace": root / "sim" / "entanglement.csv",
        "energy": root / "sim" / "energy.csv",
        "occupancy": root / "sim" / "occupancy.csv",
        "sweep": root / "sweep" / "sweep.csv",
        "fidelity": root / "fid" / "fidelity.csv",
        "fid_energy_1": root / "fid" / "energy_state1.csv",
        "fid_energy_2": root / "fid" / "energy_state2.csv",
    }
