"""Entry point for ``python -m g2fun``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
