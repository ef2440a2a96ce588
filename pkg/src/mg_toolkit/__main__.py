"""Entry point for python -m mg_toolkit."""

from mg_toolkit.cli import main

if __name__ == "__main__":
    main()
