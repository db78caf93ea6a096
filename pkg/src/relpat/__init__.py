"""Relational pattern languages over finite alphabets."""
