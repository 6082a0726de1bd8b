"""Paley Lab test suite."""
