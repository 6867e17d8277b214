"""
Regenerate wild_monodromy/data/elliptic_q8_fixed_dims.json from the
brute-force point-count oracle. Run from the repository root:

    python scripts/derive_elliptic_fixed_dims.py [--check]
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from wild_monodromy.oracles import DATA_FILE, elliptic_fixed_dims_oracle  # noqa: E402


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument(
        "--check",
        action="store_true",
        help="Compare with the frozen table instead of writing it.",
    )
    parser.add_argument("--degree", type=int, default=4, help="Degree of F_2^degree.")
    args = parser.parse_args(argv)
    table = elliptic_fixed_dims_oracle(args.degree)
    text = json.dumps(table, indent=2, sort_keys=True) + "\n"
    if args.check:
        frozen = json.loads(DATA_FILE.read_text())
        if frozen != table:
            sys.stderr.write(f"{DATA_FILE} is stale:\n{text}")
            return 1
        sys.stdout.write(f"{DATA_FILE} matches the oracle.\n")
        return 0
    DATA_FILE.write_text(text)
    sys.stdout.write(f"Wrote {DATA_FILE}.\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
