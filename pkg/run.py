#!/usr/bin/env python3
"""
qeulerian entry script.

    python run.py verify --id all --n-max 4
"""
import os
import sys

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from qeulerian.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
