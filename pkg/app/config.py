"""
Project configuration loaded from cover_pairs.config.toml.
"""

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

CONFIG_FILE_NAME = "cover_pairs.config.toml"
CONFIG_ENV_VAR = "COVER_PAIRS_CONFIG"


class HomologyConfig(BaseModel):
    field: str = Field("q", description="Coefficient field: 'q' or 'p:PRIME'")
    confirm_over_q: bool = Field(True, description="Recompute nonzero GF(p) ranks over QQ")


class GuardConfig(BaseModel):
    max_vertices: int = Field(64, description="Hard cap on graph size")
    complex_max_n: int = Field(25, description="Largest n for full independence complexes")
    hochster_max_n: int = Field(12, description="Largest n for Hochster tables")
    i_number_max_n: int = Field(32, description="Largest n for independent domination")
    max_faces: int = Field(2_000_000, description="Face-count cap for homology")
    enumerate_max_n: int = Field(7, description="Largest n for built-in enumeration")


class SurveyConfig(BaseModel):
    jobs: int = Field(1, description="Worker processes")
    spot_check_rate: float = Field(0.05, description="Share of chordal graphs re-checked by Hochster")
    oracle_sample_rate: float = Field(0.01, description="Share of graphs re-checked against series oracles")
    seed: int = Field(2024, description="Seed for sampling decisions")


class GeneratorConfig(BaseModel):
    count: int = 500
    min_n: int = 2
    max_n: int = 10
    edge_percent: int = 35
    seed: int = 7
    output: str = "random_graphs.g6"


class ProjectConfig(BaseModel):
    homology: HomologyConfig = Field(default_factory=HomologyConfig)
    guards: GuardConfig = Field(default_factory=GuardConfig)
    survey: SurveyConfig = Field(default_factory=SurveyConfig)
    generator: GeneratorConfig = Field(default_factory=GeneratorConfig)


def config_path() -> Path:
    override = os.environ.get(CONFIG_ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent.parent / CONFIG_FILE_NAME


def load_config(path: Optional[Path] = None) -> ProjectConfig:
    """
    Read the TOML config into a ProjectConfig.

    Args:
        path: Explicit file; defaults to the env override or the repo-root file

    Returns:
        ProjectConfig, all defaults when the file does not exist
    """
    path = path or config_path()
    if not path.exists():
        return ProjectConfig()
    with open(path, "rb") as f:
        data = tomllib.load(f)
    return ProjectConfig.model_validate(data)


_CONFIG: Optional[ProjectConfig] = None


def get_config() -> ProjectConfig:
    global _CONFIG
    if _CONFIG is None:
        _CONFIG = load_config()
    return _CONFIG


def use_config(path: Path) -> ProjectConfig:
    """Replace the cached config, e.g. from a --config flag"""
    global _CONFIG
    _CONFIG = load_config(path)
    return _CONFIG
