#!/usr/bin/env python3
"""
pnheights CLI

Main entry point when running from a checkout; the installed console script is `pn`.

Usage:
    python main.py coeff --primes 5,11,23 --k 71
    python main.py height --primes 5,7,11,13
    python main.py construct height1 --n 4
    python main.py bounds --n 5
"""

import sys

from pnheights.cli import main

if __name__ == "__main__":
    sys.exit(main())
