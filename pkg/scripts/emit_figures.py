"""Write the CSV data behind the three figures into a directory."""

import argparse
import sys
from pathlib import Path

from zetalap.cli import main as cli_main


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    ap.add_argument("--grid", type=int, default=500)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for fig in ("1", "2", "3"):
        code = cli_main(["plotdata", fig, "--grid", str(args.grid), "--out", str(out)])
        if code:
            sys.exit(code)


if __name__ == "__main__":
    main()
