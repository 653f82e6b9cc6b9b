"""Project configuration, dotenv loading and log setup."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any

CONFIG_DIR = ".steiner-kit"
LOG_ENV = "STEINER_KIT_LOG"
ROOT_ENV = "STEINER_KIT_ROOT"

DEFAULT_CONFIG_LINES = (
    "# steiner-kit config",
    "",
    "output.default: json",
    "verify.seed: 1729",
    "verify.max_n: 5",
    "verify.samples: 1000",
    "verify.morphism_pairs: 200",
    "log.level: WARNING",
)


def default_config_map() -> dict[str, Any]:
    """Return flat default config values."""
    return {
        "output.default": "json",
        "verify.seed": 1729,
        "verify.max_n": 5,
        "verify.samples": 1000,
        "verify.morphism_pairs": 200,
        "log.level": "WARNING",
    }


def parse_scalar(value: str) -> bool | int | str:
    """Parse a config value: booleans, integers, everything else as text."""
    raw = value.strip()
    low = raw.lower()
    if low in {"true", "false"}:
        return low == "true"
    try:
        return int(raw)
    except ValueError:
        return raw


def detect_project_root(start_path: str | Path) -> Path:
    """``STEINER_KIT_ROOT`` if set, else the nearest parent holding .git or pyproject.toml."""
    override = os.getenv(ROOT_ENV)
    if override:
        return Path(override).resolve()
    start = Path(start_path).resolve()
    if start.is_file():
        start = start.parent
    for candidate in [start, *start.parents]:
        if (candidate / ".git").exists() or (candidate / "pyproject.toml").exists():
            return candidate
    return start


def ensure_project_layout(project_root: Path) -> Path:
    """Create .steiner-kit/config.md with defaults when missing."""
    base = project_root / CONFIG_DIR
    base.mkdir(parents=True, exist_ok=True)
    config_path = base / "config.md"
    if not config_path.exists():
        config_path.write_text("\n".join(DEFAULT_CONFIG_LINES) + "\n", encoding="utf-8")
    return base


def load_config(project_root: Path) -> dict[str, Any]:
    """Load .steiner-kit/config.md into a flat map over the defaults."""
    config = default_config_map()
    cfg = project_root / CONFIG_DIR / "config.md"
    if not cfg.exists():
        return config
    for line in cfg.read_text(encoding="utf-8", errors="replace").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#") or ":" not in stripped:
            continue
        key, raw = stripped.split(":", 1)
        key = key.strip()
        if key:
            config[key] = parse_scalar(raw)
    return config


def load_dotenv(project_root: Path, filename: str = ".env") -> int:
    """Load KEY=VALUE pairs into the process environment.

    Existing variables are kept. Returns the number of keys loaded.
    """
    dotenv_path = project_root / filename
    if not dotenv_path.exists():
        return 0
    loaded = 0
    for raw_line in dotenv_path.read_text(encoding="utf-8", errors="replace").splitlines():
        line = raw_line.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, value = line.split("=", 1)
        key, value = key.strip(), value.strip()
        if not key:
            continue
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "'\"":
            value = value[1:-1]
        if key not in os.environ:
            os.environ[key] = value
            loaded += 1
    return loaded


def configure_logging(config_level: str | None = None) -> int:
    """Send library records to stderr at the level from STEINER_KIT_LOG or the config."""
    name = (os.getenv(LOG_ENV) or config_level or "WARNING").upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("steiner_kit").setLevel(level)
    return level
