#!/usr/bin/env python3
"""Regenerate the per-row status golden file for the bundled field dataset.

Spreadsheet-style evaluation, deliberately independent of the teatwatch
package: every comparison cell is spelled out below, and the only inputs
are the raw CSV and the three breakpoints. Run from the repo root:

    python tests/oracles/gen_field_golden.py

The output (tests/data/field_readings_statuses.golden.csv) is committed;
the test suite compares the package's batch classification against it.
"""

import csv
from datetime import datetime
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[2]
SOURCE = REPO_ROOT / "src" / "teatwatch" / "data" / "field_readings_2020.csv"
TARGET = REPO_ROOT / "tests" / "data" / "field_readings_statuses.golden.csv"

HEALTHY_LOW = 33.0   # exclusive
HEALTHY_HIGH = 34.5  # inclusive
ATTENTION_HIGH = 36.5  # inclusive


def teat_label(t: float) -> str:
    in_healthy_band = (t > HEALTHY_LOW) and (t <= HEALTHY_HIGH)
    in_attention_band = (t > HEALTHY_HIGH) and (t <= ATTENTION_HIGH)
    above_attention = t > ATTENTION_HIGH
    if in_healthy_band:
        return "Healthy"
    if in_attention_band:
        return "Attention"
    if above_attention:
        return "Sick"
    return "Indeterminate"


def legacy_label(temps: list[float]) -> str:
    # First matching band wins, checked band-by-band across all four teats.
    if any((t > HEALTHY_LOW) and (t <= HEALTHY_HIGH) for t in temps):
        return "Healthy"
    if any((t > HEALTHY_HIGH) and (t <= ATTENTION_HIGH) for t in temps):
        return "Attention"
    if any(t > ATTENTION_HIGH for t in temps):
        return "Sick"
    return "Indeterminate"


def worst_label(temps: list[float]) -> str:
    rank = {"Indeterminate": 0, "Healthy": 1, "Attention": 2, "Sick": 3}
    labels = [teat_label(t) for t in temps]
    return max(labels, key=lambda name: rank[name])


def main() -> None:
    with SOURCE.open(newline="", encoding="utf-8") as handle:
        rows = list(csv.DictReader(handle))
    assert len(rows) == 20, f"expected 20 field rows, found {len(rows)}"

    out_rows = []
    for row in rows:
        temps = [float(row[f"Teat{i}"]) for i in (1, 2, 3, 4)]
        iso_date = datetime.strptime(row["Date"], "%d/%m/%Y").date().isoformat()
        out_rows.append(
            {
                "id_animal": row["IdCow"],
                "date": iso_date,
                "teto1": f"{temps[0]:.2f}",
                "teto2": f"{temps[1]:.2f}",
                "teto3": f"{temps[2]:.2f}",
                "teto4": f"{temps[3]:.2f}",
                "status_legacy": legacy_label(temps),
                "status_worst_teat": worst_label(temps),
            }
        )

    with TARGET.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(out_rows[0]))
        writer.writeheader()
        writer.writerows(out_rows)
    print(f"wrote {len(out_rows)} rows to {TARGET}")


if __name__ == "__main__":
    main()
