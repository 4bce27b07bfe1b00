#!/usr/bin/env python3
"""Rebuild the consolidated claim report and print every evidence row.

This is the long form of ``braidsub report``: each claim row comes with
its evidence dictionary so a failing row can be chased without rerunning
anything by hand.  The JSON copy lands next to the console output.
"""

import argparse
import json
import os
import sys

from braidsub.cli import build_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--outdir", default=os.environ.get("BRAIDSUB_OUTDIR", "."),
                        help="directory for the JSON copy")
    parser.add_argument("--evidence", action="store_true",
                        help="print the evidence dict for every row, not just failures")
    args = parser.parse_args()

    report = build_report()
    os.makedirs(args.outdir, exist_ok=True)
    path = os.path.join(args.outdir, "report.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")

    for row in report["rows"]:
        print("%-4s %-16s %s" % (row["status"], row["claim"], row["statement"]))
        if args.evidence or row["status"] != "pass":
            print("     evidence: %s" % json.dumps(row["evidence"], sort_keys=True))
    print("overall: %s (written to %s)" % ("pass" if report["pass"] else "FAIL", path))
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
