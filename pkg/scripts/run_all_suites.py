"""Run every registered check suite and print the full report.

Equivalent to `ulat suite run <every name>` but handy as a single script:

    python3 scripts/run_all_suites.py --timings --format md
"""

import argparse
import sys

from ulat.suites import SuiteConfig, render_json, render_markdown, run_suites, suite_names


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--horizon", type=int, default=None,
                        help="prefix length for horizon-bounded checks")
    parser.add_argument("--format", choices=("json", "md"), default="md")
    parser.add_argument("--timings", action="store_true")
    args = parser.parse_args()

    kwargs = {"seed": args.seed, "timings": args.timings}
    if args.horizon is not None:
        kwargs["horizon"] = args.horizon
    cfg = SuiteConfig(**kwargs)
    report = run_suites(suite_names(), cfg)
    render = render_json if args.format == "json" else render_markdown
    sys.stdout.write(render(report))
    return 0 if all(rec["status"] == "pass" for rec in report["suites"]) else 1


if __name__ == "__main__":
    sys.exit(main())
