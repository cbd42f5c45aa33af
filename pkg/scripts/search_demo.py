#!/usr/bin/env python3
"""Build a small catalog of group files and run the search driver on it.

Usage: python3 scripts/search_demo.py [--keep DIR]

Writes a handful of group files (cyclic groups, a quaternion group, the
order-24 example) into a temporary directory, then scans them the way
`torusquot search --catalog DIR` does: primitivity first, then the
per-irreducible eigenvalue test with Frobenius-Schur types.
"""

import argparse
import sys
import tempfile
from pathlib import Path

from torusquot.cli import main as cli_main
from torusquot.fixtures import S4_FILE

C2 = "conductor 1\ndegree 1\ngenerator dense\nrow -1\n"

C4 = "conductor 4\ndegree 1\ngenerator monomial\nmap 1\nscalars z^1\n"

Q8 = (
    "conductor 4\ndegree 2\n"
    "generator monomial\nmap 1 2\nscalars z^1; -z^1\n"
    "generator monomial\nmap 2 1\nscalars -1; 1\n"
)

S3 = (
    "conductor 3\ndegree 2\n"
    "generator perm\nmap 2 1\n"
    "generator monomial\nmap 1 2\nscalars z^1; -1 + -z^1\n"
)

CATALOG = {
    "c2.group": C2,
    "c4.group": C4,
    "q8.group": Q8,
    "s3.group": S3,
    "s4.group": S4_FILE,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--keep", metavar="DIR", default=None,
                        help="write the catalog here instead of a temp dir")
    args = parser.parse_args(argv)

    if args.keep:
        target = Path(args.keep)
        target.mkdir(parents=True, exist_ok=True)
        return _run(target)
    with tempfile.TemporaryDirectory() as tmp:
        return _run(Path(tmp))


def _run(target: Path) -> int:
    for name, text in CATALOG.items():
        (target / name).write_text(text)
    print(f"catalog: {target} ({len(CATALOG)} files)")
    return cli_main(["search", "--catalog", str(target)])


if __name__ == "__main__":
    sys.exit(main())
