"""UI components for console output."""

from __future__ import annotations

from .console import create_console, create_error_console, print_banner, print_claim_table

__all__ = ["create_console", "create_error_console", "print_banner", "print_claim_table"]
