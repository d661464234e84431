"""Count residual games of ps1-ps5 and save those of ps1 to disk.

Residual rates are tiny, so this takes a while; raise COUNT to get
stable numbers.
"""

import tempfile

from pgpartial import RandomConfig, hunt_residuals, named_pipeline, residual_rates

COUNT = 5000
cfg = RandomConfig.parse("50-25-2-3")

report, residuals = residual_rates(cfg, COUNT, seed=0)
for name, k in report.residual_count.items():
    print(f"{name}: {k} residual games ({100 * k / COUNT:.3f}%)")

with tempfile.TemporaryDirectory() as out:
    found, rep = hunt_residuals(named_pipeline("ps1"), cfg, 1000, seed=0, out=out)
    print(f"ps1 left {len(found)} of 1000 games unsolved; files written to a temporary directory")
