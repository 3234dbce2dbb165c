"""Run the max-cut command line from a source checkout."""
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.cli import main

if __name__ == "__main__":
    sys.exit(main())
