"""Configuration management for the Paley Lab CLI."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

# Conditional import for Python 3.10 compatibility
if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib  # type: ignore[import-not-found]

from paley_lab.core.characterize import (
    CARLITZ_MAX_Q,
    LENSTRA_MAX_Q,
    MCCONNEL_MAX_Q,
    PALEY_AUT_MAX_Q,
)
from paley_lab.core.exporter import EXPORT_FORMATS, ExportFormat
from paley_lab.core.graph import ISO_MAX_VERTICES
from paley_lab.core.groups import CLOSURE_LIMIT, DESIGN_MAX_POINTS, GROUP_MAX_ORDER
from paley_lab.core.hadamard import PALEY3_MAX_K
from paley_lab.core.parallel import DEFAULT_WORKERS, ParallelConfig


@dataclass
class LimitsConfig:
    """Desk-scale bounds for the exhaustive searches."""

    iso_max_vertices: int = ISO_MAX_VERTICES
    design_max_points: int = DESIGN_MAX_POINTS
    closure_limit: int = CLOSURE_LIMIT
    group_max_order: int = GROUP_MAX_ORDER
    carlitz_max_q: int = CARLITZ_MAX_Q
    mcconnel_max_q: int = MCCONNEL_MAX_Q
    lenstra_max_q: int = LENSTRA_MAX_Q
    paley3_max_k: int = PALEY3_MAX_K
    paley_aut_max_q: int = PALEY_AUT_MAX_Q

    @property
    def group_limits(self) -> dict[str, int]:
        """Keyword arguments accepted by every group constructor."""
        return {"closure_limit": self.closure_limit, "max_order": self.group_max_order}


@dataclass
class VerifyConfig:
    """Settings for `paley-lab verify`."""

    parallel: bool = True
    workers: int = DEFAULT_WORKERS
    slow: bool = False

    @property
    def parallel_config(self) -> ParallelConfig:
        return ParallelConfig(enabled=self.parallel, max_workers=self.workers)


@dataclass
class OutputConfig:
    """Default output format for graph exports."""

    format: ExportFormat = "edges"


@dataclass
class Config:
    """Root configuration container."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    # Metadata (not from TOML)
    _source: Path | None = field(default=None, repr=False)


def get_xdg_config_home() -> Path:
    """Get XDG config home, respecting environment variable."""
    xdg = os.environ.get("XDG_CONFIG_HOME")
    if xdg:
        return Path(xdg)
    return Path.home() / ".config"


def get_config_paths() -> tuple[Path, Path]:
    """
    Get config file paths in priority order.

    Returns:
        (xdg_path, cwd_path) - XDG is base, CWD overrides
    """
    xdg_path = get_xdg_config_home() / "paley-lab" / "config.toml"
    cwd_path = Path.cwd() / "paleylab.toml"
    return xdg_path, cwd_path


def _load_toml(path: Path) -> dict[str, Any]:
    try:
        with open(path, "rb") as f:
            result: dict[str, Any] = tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ValueError(f"Invalid TOML in {path}: {e}") from e
    return result


def _merge_dicts(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Deep merge two dictionaries, override takes precedence."""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _merge_dicts(result[key], value)
        else:
            result[key] = value
    return result


def _is_positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def _validate_config(data: dict[str, Any]) -> list[str]:
    """Validate TOML data and return list of errors."""
    errors: list[str] = []

    limits = data.get("limits", {})
    for f in fields(LimitsConfig):
        if f.name in limits and not _is_positive_int(limits[f.name]):
            errors.append(f"Invalid limits.{f.name}: {limits[f.name]!r} (use a positive integer)")

    verify = data.get("verify", {})
    for key in ("parallel", "slow"):
        if key in verify and not isinstance(verify[key], bool):
            errors.append(f"Invalid verify.{key}: {verify[key]!r} (use true or false)")
    if "workers" in verify and not _is_positive_int(verify["workers"]):
        errors.append(f"Invalid verify.workers: {verify['workers']!r} (use a positive integer)")

    fmt = data.get("output", {}).get("format")
    if fmt is not None and fmt not in EXPORT_FORMATS:
        errors.append(f"Invalid output.format: {fmt!r} (use: {', '.join(EXPORT_FORMATS)})")

    return errors


def _filter_known_keys(data: dict[str, Any], dataclass_type: type) -> dict[str, Any]:
    """Filter dict to only include keys that are valid fields for the dataclass."""
    valid_fields = {f.name for f in fields(dataclass_type)}
    return {k: v for k, v in data.items() if k in valid_fields}


SECTION_TYPES: dict[str, type] = {
    "limits": LimitsConfig,
    "verify": VerifyConfig,
    "output": OutputConfig,
}


def _dict_to_config(data: dict[str, Any], source: Path | None = None) -> Config:
    sections = {
        name: cls(**_filter_known_keys(data.get(name, {}), cls))
        for name, cls in SECTION_TYPES.items()
    }
    return Config(**sections, _source=source)


def load_config() -> Config:
    """
    Load configuration with XDG + CWD override precedence.

    Priority (highest to lowest):
    1. ./paleylab.toml (CWD override)
    2. ~/.config/paley-lab/config.toml (XDG base)
    3. Built-in defaults

    Raises:
        ValueError: If either file has invalid TOML or fails validation
    """
    merged_data: dict[str, Any] = {}
    active_source: Path | None = None

    for path in get_config_paths():
        if path.exists():
            merged_data = _merge_dicts(merged_data, _load_toml(path))
            active_source = path

    if merged_data:
        errors = _validate_config(merged_data)
        if errors:
            raise ValueError(f"Config validation failed ({active_source}): {'; '.join(errors)}")

    return _dict_to_config(merged_data, active_source)


def load_config_from_file(path: Path) -> Config:
    """Load configuration from a specific file, ignoring the search path."""
    data = _load_toml(path)
    errors = _validate_config(data)
    if errors:
        raise ValueError(f"Config validation failed ({path}): {'; '.join(errors)}")
    return _dict_to_config(data, path)


DEFAULT_CONFIG_TEMPLATE = f"""\
# Paley Lab Configuration

[limits]
# Bounds on the exhaustive searches; raising them trades time for reach
iso_max_vertices = {ISO_MAX_VERTICES}       # Isomorphism and automorphism search
design_max_points = {DESIGN_MAX_POINTS}      # Design automorphism search
closure_limit = {CLOSURE_LIMIT}      # Groups up to this order are enumerated as a cross-check
group_max_order = {GROUP_MAX_ORDER}   # Largest group accepted
carlitz_max_q = {CARLITZ_MAX_Q}          # verify carlitz
mcconnel_max_q = {MCCONNEL_MAX_Q}         # verify mcconnel
lenstra_max_q = {LENSTRA_MAX_Q}          # verify lenstra
paley3_max_k = {PALEY3_MAX_K}            # hadamard build paley3
paley_aut_max_q = {PALEY_AUT_MAX_Q}        # verify theorem41

[verify]
parallel = true         # Run claims on a thread pool
workers = {DEFAULT_WORKERS}             # Pool size (1-32)
slow = false            # Include claims registered as slow

[output]
format = "edges"        # Graph export format: dot, edges, matrix
"""
