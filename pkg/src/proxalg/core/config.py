from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path


class Settings(BaseSettings):
    max_points: int = 6
    exhaustive_subset_limit: int = 4096
    sampled_pairs: int = 100
    group_subset_limit: int = 10
    max_witnesses: int = 10
    default_seed: int = 0
    fixtures_path: str = str(Path(__file__).parent.parent / "fixtures")
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(env_prefix="PROXALG_", env_file=".env", extra="ignore")
