from __future__ import annotations

import json

import pytest

from nmbplots import FigureRecipe, SchemaError, render
from nmbplots.cli import main_fidelity, main_occupancy, main_sweep, main_traces


def trace_csv(tmp_path, name="trace.csv"):
    path = tmp_path / name
    path.write_text("t,E\n0,5.77\n0.1,5.4\n0.2,5.6\n")
    return path


def occupancy_csv(tmp_path, omegas=(0.5, 2.0, 10.0, 29.0, 40.0)):
    lines = ["t,omega,occupancy"]
    for t in (0.0, 0.5, 1.0):
        lines += [f"{t},{w},{t + w}" for w in omegas]
    path = tmp_path / "occupancy.csv"
    path.write_text("\n".join(lines) + "\n")
    return path


class TestRender:
    def test_trace_family(self, tmp_path):
        a = trace_csv(tmp_path, "a.csv")
        b = trace_csv(tmp_path, "b.csv")
        out = tmp_path / "fig.png"
        recipe = FigureRecipe(
            kind="trace-family", inputs=[str(a), str(b)], output=str(out),
            labels=["alpha=0.2", "alpha=1.0"],
        )
        assert render(recipe) == out
        assert out.stat().st_size > 0

    def test_rerender_identical(self, tmp_path):
        a = trace_csv(tmp_path)
        out1, out2 = tmp_path / "f1.png", tmp_path / "f2.png"
        for out in (out1, out2):
            render(FigureRecipe(kind="trace-family", inputs=[str(a)], output=str(out)))
        assert out1.read_bytes() == out2.read_bytes()

    def test_heatmap_window(self, tmp_path):
        path = occupancy_csv(tmp_path)
        out = tmp_path / "occ.png"
        render(FigureRecipe(kind="heatmap", inputs=[str(path)], output=str(out)))
        assert out.stat().st_size > 0

    def test_heatmap_low_end_flag(self, tmp_path):
        # only low-frequency modes: the default window excludes all of them
        path = occupancy_csv(tmp_path, omegas=(0.2, 0.5, 0.8))
        out = tmp_path / "occ.png"
        with pytest.raises(SchemaError, match="window"):
            render(FigureRecipe(kind="heatmap", inputs=[str(path)], output=str(out)))
        render(
            FigureRecipe(
                kind="heatmap", inputs=[str(path)], output=str(out), include_low_end=True
            )
        )
        assert out.exists()

    def test_schema_violations_raise_before_writing(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("time,E\n0,1\n")
        out = tmp_path / "fig.png"
        with pytest.raises(SchemaError, match="'t'"):
            render(FigureRecipe(kind="trace-family", inputs=[str(bad)], output=str(out)))
        assert not out.exists()

    def test_recipe_validation(self, tmp_path):
        with pytest.raises(SchemaError, match="kind"):
            render(FigureRecipe(kind="pie", inputs=["x.csv"], output="o.png"))
        with pytest.raises(SchemaError, match="at least one"):
            render(FigureRecipe(kind="trace-family", inputs=[], output="o.png"))
        a = trace_csv(tmp_path)
        with pytest.raises(SchemaError, match="labels"):
            render(
                FigureRecipe(
                    kind="trace-family", inputs=[str(a)], output="o.png",
                    labels=["x", "y"],
                )
            )


class TestScripts:
    def test_plot_traces_script(self, tmp_path, capsys):
        a = trace_csv(tmp_path)
        out = tmp_path / "fig.png"
        assert main_traces([str(a), "-o", str(out)]) == 0
        assert out.exists()
        assert "wrote" in capsys.readouterr().out

    def test_plot_traces_schema_error_exit(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("t,q\n0,0\n")
        assert main_traces([str(bad), "-o", str(tmp_path / "f.png")]) == 2
        assert "'E'" in capsys.readouterr().err

    def test_empty_trace_file_fails_cleanly(self, tmp_path, capsys):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        assert main_traces([str(empty), "-o", str(tmp_path / "f.png")]) == 2
        assert not (tmp_path / "f.png").exists()

    def test_sweep_script(self, tmp_path):
        path = tmp_path / "sweep.csv"
        path.write_text("alpha,nmbq\n0.2,0\n1.0,1.5\n")
        out = tmp_path / "sweep.png"
        assert main_sweep([str(path), "-o", str(out), "--labels", "ohmic"]) == 0
        assert out.exists()

    def test_occupancy_script(self, tmp_path):
        path = occupancy_csv(tmp_path)
        out = tmp_path / "occ.png"
        assert main_occupancy([str(path), "-o", str(out)]) == 0
        assert out.exists()

    def test_fidelity_and_energy_modes(self, tmp_path):
        fid = tmp_path / "fidelity.csv"
        fid.write_text("t,F\n0,1\n0.1,0.9\n")
        en = tmp_path / "energy.csv"
        en.write_text("t,E_sys\n0,10\n0.1,9.5\n")
        assert main_fidelity([str(fid), "-o", str(tmp_path / "f.png")]) == 0
        assert main_fidelity([str(en), "--energy", "-o", str(tmp_path / "e.png")]) == 0
        # energy CSV against the fidelity schema must fail loudly
        assert main_fidelity([str(en), "-o", str(tmp_path / "x.png")]) == 2

    def test_recipe_file(self, tmp_path):
        a = trace_csv(tmp_path)
        out = tmp_path / "fig.png"
        recipe = tmp_path / "recipe.json"
        recipe.write_text(
            json.dumps(
                {"kind": "trace-family", "inputs": [str(a)], "output": str(out)}
            )
        )
        assert main_traces(["--recipe", str(recipe)]) == 0
        assert out.exists()

    def test_bad_recipe_keys(self, tmp_path):
        recipe = tmp_path / "recipe.json"
        recipe.write_text(json.dumps({"kind": "trace-family", "paths": ["a.csv"]}))
        assert main_traces(["--recipe", str(recipe)]) == 2
