"""Exact invariants of rational surface singularities."""
