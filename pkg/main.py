#!/usr/bin/env python3
"""
Main entry point for the news-market toolkit.

Examples:
  python main.py scenario --preset fig2 --out runs/fig2
  python main.py simulate --config configs/fig2.cfg --seed 3 --out fig2_seed3.csv
  python main.py fit-tail --input prices.csv --column close
"""

import sys
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

from news_market.interfaces.cli_interface import cli


def main():
    """Main entry point."""
    cli(prog_name='news-market')


if __name__ == "__main__":
    main()
