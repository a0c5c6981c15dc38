"""Run configuration: hard caps and worker count.

The caps guard the CLI against accidental combinatorial blowup; requested
sweep bounds beyond a cap are a usage error.  Values come from (in order of
increasing precedence) built-in defaults, a ``key=value`` config file, and
``CAPELLI_*`` environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_PREFIX = "CAPELLI_"


@dataclass(frozen=True)
class Config:
    size_cap: int = 14   # largest |lambda| any sweep may request
    n_cap: int = 10      # largest N for the derivative identity
    k_cap: int = 6       # largest parameter k
    default_k: int = 0   # k used by commands when --k is omitted
    jobs: int = 0        # verification workers; 0 means available parallelism

    def effective_jobs(self) -> int:
        return self.jobs if self.jobs > 0 else (os.cpu_count() or 1)


_FIELDS = ("size_cap", "n_cap", "k_cap", "default_k", "jobs")


class ConfigError(ValueError):
    pass


def parse_config_text(text: str, base: Config | None = None) -> Config:
    cfg = base or Config()
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _FIELDS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            updates[key] = int(value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {key} needs an integer, got {value!r}") from exc
    return replace(cfg, **updates)


def load_config(path: str | None = None, environ: dict | None = None) -> Config:
    cfg = Config()
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                cfg = parse_config_text(fh.read(), cfg)
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    env = os.environ if environ is None else environ
    updates = {}
    for name in _FIELDS:
        raw = env.get(ENV_PREFIX + name.upper())
        if raw is not None:
            try:
                updates[name] = int(raw)
            except ValueError as exc:
                raise ConfigError(f"{ENV_PREFIX}{name.upper()} needs an integer, got {raw!r}") from exc
    return replace(cfg, **updates)
