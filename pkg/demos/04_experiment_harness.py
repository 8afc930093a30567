"""Repeated random splits, a recognition-rate table, sweeps and a boundary grid.

The same runs are available from the command line, e.g.

    python -m kddasvm table1 --config demo.cfg --out results/

To run against a face database, point ``dataset`` at a directory with one
subdirectory of PGM images per person and set ``image_width`` and
``image_height``.
"""
import dataclasses
from pathlib import Path

from kddasvm.harness import (
    parse_config,
    run_boundary,
    run_table1,
    sweep_m,
    sweep_sigma,
)

cfg = parse_config("""
    dataset = rings
    synth_classes = 4
    synth_per_class = 30
    synth_noise = 0.05
    k_train = 3, 6, 10
    repeats = 5
    tune_extractor = true
""")

report = run_table1(cfg)
print(report.table())

single = dataclasses.replace(cfg, k_train=(10,))
curve = sweep_sigma(single, [0.01, 0.1, 1.0, 10.0, 1e4])
for s2, err in zip(curve.values, curve.errors):
    print(f"svm sigma2 {s2:>8g}: error {err:.3f}")

curve = sweep_m(single, [1, 2, 3])
for m, err in zip(curve.values, curve.errors):
    print(f"M = {m}: error {err:.3f}")

grid, train = run_boundary(dataclasses.replace(single, boundary_resolution=60))
out = Path("boundary_demo")
out.mkdir(exist_ok=True)
(out / "grid.csv").write_text(grid)
(out / "train.csv").write_text(train)
print(f"wrote {len(grid.splitlines()) - 1} grid predictions to {out}/grid.csv")
