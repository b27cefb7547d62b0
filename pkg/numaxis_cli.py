"""
Command-line entrypoint for numaxis when run from a source checkout.

    python numaxis_cli.py zeta --s -1
    python numaxis_cli.py figure1 --xc 1 --out fig1.svg
"""

import os
import sys

# Add src directory to path for the numaxis package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "src"))

from numaxis.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
