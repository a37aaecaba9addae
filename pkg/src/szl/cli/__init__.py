"""Command-line interface of szl."""
