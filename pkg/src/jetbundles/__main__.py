"""Module entry point: ``python -m jetbundles``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
