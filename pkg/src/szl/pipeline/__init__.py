"""Composite workflows: lumping, aggregation and Verblunsky extraction."""
