"""Allow ``python -m senvr`` to behave like the installed script."""

from senvr.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
