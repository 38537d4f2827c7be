"""python -m qeulerian"""
import sys

from .cli import main

sys.exit(main())
