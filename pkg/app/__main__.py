# ============================================
# app/__main__.py - python -m app 진입점
# ============================================

import sys

from app.cli import main


if __name__ == "__main__":
    sys.exit(main())
