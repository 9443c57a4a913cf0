"""Location of the shipped data files (override with AXCOUNT_DATA)."""
from __future__ import annotations

import os
from pathlib import Path

PACKAGE_DATA = Path(__file__).resolve().parent / "data"


def data_dir() -> Path:
    env = os.environ.get("AXCOUNT_DATA")
    return Path(env) if env else PACKAGE_DATA


def data_path(name: str) -> Path:
    return data_dir() / name


def data_lines(name: str) -> list[str]:
    """Non-empty lines with ``#`` comments stripped."""
    out = []
    for raw in data_path(name).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out
