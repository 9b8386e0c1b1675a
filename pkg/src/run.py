#!/usr/bin/env python3
"""
sepax Entry Point

Thin launcher: puts src/ on the path and hands over to sepax.main.
"""

import sys
import os

# Add current directory to Python path for local imports
sys.path.insert(0, os.path.dirname(__file__))

from sepax.main import main

if __name__ == "__main__":
    sys.exit(main())
