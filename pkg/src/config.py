import pathlib
from typing import Literal, Optional
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    n_max: int = 8
    n_cls: Optional[int] = None
    min_classification_depth: int = 6
    max_classification_depth: int = 12
    rel_tol: float = 1e-9
    root_tolerance: float = 1e-12
    max_iterations: int = 100_000
    frontier_budget: int = 200_000
    prune: bool = True
    arithmetic: Literal["exact", "float"] = "exact"
    lambda_max_relative_width: float = 0.05
    q_ratio_limit: float = 10.0
    significant_digits: int = 15
    data_path: str = "data"
    log_level: str = "INFO"

    __project_root = pathlib.Path(__file__).resolve().parent.parent

    model_config = SettingsConfigDict(env_file=f"{__project_root}/.env", extra="ignore")


settings = Settings()
