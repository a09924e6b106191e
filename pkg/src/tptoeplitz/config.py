"""JSON configuration files (schema 1)."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ConfigError

SCHEMA_VERSION = 1


def load(path) -> object:
    """Read a JSON config; objects may carry ``"schema": 1``."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read file: {exc.strerror}", path=str(path)) from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON at line {exc.lineno}: {exc.msg}", path=str(path)) from exc
    if isinstance(obj, dict) and "schema" in obj:
        if obj["schema"] != SCHEMA_VERSION:
            raise ConfigError(f"unsupported schema {obj['schema']!r} (expected {SCHEMA_VERSION})",
                              path=str(path), field="schema")
    return obj


def section(obj, key: str, path=None):
    """``obj[key]`` if ``obj`` is a wrapper object holding ``key``, else ``obj``."""
    if isinstance(obj, dict) and key in obj and not isinstance(obj[key], str):
        return obj[key]
    return obj


def dump(obj) -> str:
    return json.dumps(obj, indent=2)
