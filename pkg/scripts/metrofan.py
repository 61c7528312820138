#!/usr/bin/env python3
"""
metrofan - command-line entry point

Usage:
    metrofan.py analyze <file> [--facets] [--dot DIR]
    metrofan.py arrangement --n N [--count] [--list]
    metrofan.py compare <file1> <file2>
    metrofan.py reproduce <target>
"""
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.main import main


if __name__ == "__main__":
    sys.exit(main())
