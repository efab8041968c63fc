"""Run identity report suites and print a verdict table.

Exit status is 0 when every report passes, 1 otherwise, so this can sit
in a cron job or CI step.
"""
import argparse
import sys

from beamkit.identities import SUITE_NAMES, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all",
                    choices=("all",) + SUITE_NAMES)
    ap.add_argument("--show-passing", action="store_true",
                    help="list every report, not only failures")
    args = ap.parse_args(argv)

    reports = run_suite(args.suite)
    n_fail = 0
    print(f"{'identity':42s} {'abs err':>10s} {'tol':>8s}  verdict")
    for r in reports:
        if not r.ok:
            n_fail += 1
        if args.show_passing or not r.ok:
            verdict = "ok" if r.ok else "FAIL"
            print(f"{r.identity_id:42s} {r.abs_err:10.2e} {r.tol:8.0e}  "
                  f"{verdict}")
    print(f"{len(reports) - n_fail}/{len(reports)} reports pass")
    return 1 if n_fail else 0


if __name__ == "__main__":
    sys.exit(main())
