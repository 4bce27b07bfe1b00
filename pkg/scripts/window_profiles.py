#!/usr/bin/env python3
"""Tabulate abelian invariants as the truncation window grows.

For each group and rank the reduced presentation is truncated to a
ladder of symmetric windows; the table shows the torsion coefficients
and free rank per window, plus whether the profile has stabilized
(fixed torsion, constant rank growth).  Useful for picking windows big
enough that the truncation artifacts are gone.
"""

import argparse
import sys
from dataclasses import dataclass, field

from braidsub.abelianize import stabilization_profile
from braidsub.errors import BraidsubError


@dataclass
class SweepConfig:
    groups: tuple = ("vb", "wb")
    ranks: tuple = (3, 4, 5, 6)
    radii: tuple = (3, 4, 5)
    rows: list = field(default_factory=list)

    def windows(self):
        return tuple((-r, r) for r in self.radii)


def run(cfg: SweepConfig) -> list:
    for group in cfg.groups:
        for n in cfg.ranks:
            try:
                prof = stabilization_profile(group, n, cfg.windows())
            except BraidsubError as exc:
                cfg.rows.append((group, n, "error: %s" % exc, "", ""))
                continue
            per_window = ", ".join(
                "%s + Z^%d" % (r["torsion"] or "[]", r["free_rank"])
                for r in prof["rows"]
            )
            cfg.rows.append(
                (
                    group,
                    n,
                    per_window,
                    "stable" if prof["stable"] else "moving",
                    "delta=%s" % prof["free_rank_delta"],
                )
            )
    return cfg.rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--groups", default="vb,wb")
    parser.add_argument("--ranks", default="3,4,5,6")
    parser.add_argument("--radii", default="3,4,5",
                        help="window radii, e.g. 3,4,5 for [-3,3],[-4,4],[-5,5]")
    args = parser.parse_args()
    cfg = SweepConfig(
        groups=tuple(args.groups.split(",")),
        ranks=tuple(int(x) for x in args.ranks.split(",")),
        radii=tuple(int(x) for x in args.radii.split(",")),
    )
    rows = run(cfg)
    width = max(len(r[2]) for r in rows)
    for group, n, profile, stable, delta in rows:
        print("%s n=%d  %-*s  %-7s %s" % (group, n, width, profile, stable, delta))
    return 0


if __name__ == "__main__":
    sys.exit(main())
