from functools import cached_property
from pathlib import Path

from .pydantic_settings_file import (
    BaseFileSettings,
    SettingsConfigDict,
    settings_property,
)

JSJCUBE_ROOT = Path(__file__).resolve().parents[2]


class BasicConfig(BaseFileSettings):
    """General runtime behaviour."""

    model_config = SettingsConfigDict(
        yaml_file=JSJCUBE_ROOT / "config.yaml", env_prefix="JSJCUBE_"
    )

    log_verbose: bool = True
    """show debug records and tracebacks in logs"""
    log_file: str = "jsjcube.log"
    threads: int = 1
    """worker threads for classification and dual-tree stages"""
    show_progress: bool = False

    @cached_property
    def LOG_PATH(self) -> Path:
        return JSJCUBE_ROOT / "logs"

    def make_dirs(self):
        self.LOG_PATH.mkdir(parents=True, exist_ok=True)


class LimitsConfig(BaseFileSettings):
    """Resource caps. The theoretical bounds are astronomically large, so every
    exponential stage is clamped by one of these."""

    model_config = SettingsConfigDict(
        yaml_file=JSJCUBE_ROOT / "limits.yaml", env_prefix="JSJCUBE_"
    )

    max_cells: int = 200_000
    """largest sphere graph or developed ball, in nodes"""
    max_cycles: int = 200_000
    """largest number of cycle classes one enumeration may yield"""
    max_cycle_len: int = 12
    """default cycle length clamp for jsj runs"""
    max_word_len: int = 4
    """default letter-length clamp for relative and general runs"""
    scan_all_domains: bool = False
    """check k-repetitivity on every rotation of the fundamental domain"""


class ConfigsContainer:
    JSJCUBE_ROOT = JSJCUBE_ROOT

    basic_config: BasicConfig = settings_property(BasicConfig())
    limits_config: LimitsConfig = settings_property(LimitsConfig())

    def create_all_templates(self):
        self.basic_config.create_template_file(write_file=True)
        self.limits_config.create_template_file(write_file=True)


Configs = ConfigsContainer()
