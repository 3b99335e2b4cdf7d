"""Run the ten acceptance criteria; print one line each and optionally dump JSON."""
import argparse
import json
import sys

from fano_instanton.acceptance import run_all
from fano_instanton.config import DEFAULT_SEED, AcceptanceConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args()
    results = run_all(AcceptanceConfig(seed=args.seed))
    for r in results:
        print(f"{r.line()}  ({r.seconds:.2f}s)")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_dict(timing=True) for r in results], fh, indent=2, default=str)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
