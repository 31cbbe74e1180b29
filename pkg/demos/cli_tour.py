"""
Driving the command line end to end
===================================

Writes a state file, runs a few subcommands in-process, and prints what
each one returns. Every run is reproducible from the seed in the header.
"""

import json
import tempfile
from pathlib import Path

from entbounds import cli, dumps_state, werner

workdir = Path(tempfile.mkdtemp())
state_file = workdir / "werner09.json"
state_file.write_text(dumps_state(werner(0.9)))

print("$ entbounds measure", state_file.name, "eof_2x2 --format json")
cli.main(["measure", str(state_file), "eof_2x2", "--format", "json"])
print()

print("$ entbounds tail-scan --p 0.5 --n-list 100,10000")
cli.main(["tail-scan", "--p", "0.5", "--n-list", "100,10000"])
print()

out = workdir / "ball.json"
code = cli.main(
    [
        "ball-scan",
        str(state_file),
        "--epsilon",
        "1e-3",
        "--samples",
        "50",
        "--p-points",
        "8",
        "--out",
        str(out),
    ]
)
payload = json.loads(out.read_text())
print("ball-scan exit code:", code)
print("corridor passed:", payload["corridor"]["all_passed"])
print("reports written next to", out)
