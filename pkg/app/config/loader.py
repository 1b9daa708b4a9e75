import yaml
import os
from typing import Optional
from .schema import GlobalConfig

DEFAULT_CONFIG_PATH = "config.yaml"


def load_config(config_path: Optional[str] = None) -> GlobalConfig:
    if config_path is None:
        if not os.path.exists(DEFAULT_CONFIG_PATH):
            return GlobalConfig()
        config_path = DEFAULT_CONFIG_PATH
    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Config file not found at {config_path}")

    with open(config_path, "r") as f:
        data = yaml.safe_load(f) or {}

    return GlobalConfig(**data)
