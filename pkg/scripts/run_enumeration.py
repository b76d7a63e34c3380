#!/usr/bin/env python3
"""
Entry point for the connected induced subgraph enumeration toolkit.

Examples:
    python scripts/run_enumeration.py enumerate --input graph.txt --k 4
    python scripts/run_enumeration.py verify --recipe path:6 --k 3
    python scripts/run_enumeration.py bench --recipe gnp:20:0.3:1 --k 5 --repeat 3
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.main import main


if __name__ == "__main__":
    sys.exit(main())
