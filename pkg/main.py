#!/usr/bin/env python3
"""
Cayley Forms - Main Entry Point

Cayley and Chow forms on the Grassmannian of lines in P^3.
"""

import sys

from src.cli import main

if __name__ == '__main__':
    sys.exit(main())
