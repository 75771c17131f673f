"""Command-line utilities. Inspired from MNE."""
