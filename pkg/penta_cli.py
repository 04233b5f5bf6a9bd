"""
penta_cli.py
============
Command-line entry point for the penta-valued toolkit.

Run locally:
    python penta_cli.py decompose --input pairs.csv
    python penta_cli.py logic --expr "a | b" --table

Defaults (s-spec, precision, output format, truth-table cap) can be set in a
.env file; see apis/penta/README.md.
"""

import sys

from dotenv import load_dotenv

load_dotenv()

from apis.penta.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
