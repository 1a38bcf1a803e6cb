import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings

load_dotenv(override=True)


class Settings(BaseSettings):
    """
    A settings class for the project defining the defaults every command falls back
    to when neither a flag nor a config file sets a value.
    """

    # App variables
    APP_NAME: str = os.getenv("APP_NAME", "curvsel")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    DATA_DIR: Path = Path(os.getenv("DATA_DIR", "data"))

    # Dataset parsing
    MISSING_MARKER: str = os.getenv("MISSING_MARKER", "?")
    DELIMITER: str = os.getenv("DELIMITER", ",")

    # Experiment defaults
    DEFAULT_SEED: int = os.getenv("DEFAULT_SEED", 0)  # type: ignore
    DEFAULT_FOLDS: int = os.getenv("DEFAULT_FOLDS", 10)  # type: ignore
    PN_ALPHA: float = os.getenv("PN_ALPHA", 0.1)  # type: ignore
    BIN_COUNT: int = os.getenv("BIN_COUNT", 10)  # type: ignore
    N_JOBS: int = os.getenv("N_JOBS", 1)  # type: ignore

    @field_validator("LOG_LEVEL", mode="before")
    def upper_log_level(cls, val) -> str:
        """
        Normalise the log level name so `debug` and `DEBUG` both work.
        """
        return str(val).upper()

    @field_validator("DEFAULT_FOLDS")
    def check_folds(cls, val: int) -> int:
        """
        Cross-validation needs at least two folds.
        """
        if val < 2:
            raise ValueError("DEFAULT_FOLDS must be at least 2")
        return val

    def dataset_path(self, dataset_id: str) -> Path:
        """
        Location of the canonical CSV for a benchmark dataset.
        """
        return self.DATA_DIR / f"{dataset_id.lower()}.csv"


settings = Settings()
