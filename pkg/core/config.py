from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Any, Optional
from functools import lru_cache
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    # General Settings
    PROJECT_NAME: str = "Braided Doubles"
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None
    LOG_ROTATION: str = "50 MB"
    LOG_RETENTION: str = "10 days"

    # Size Caps
    MAX_GROUP_ORDER: int = 100000
    MAX_MATRIX_DIM: int = 3000
    ORACLE_CAP: int = 5  # largest n for the sum over S_n
    GROUP_SPOT_CHECKS: int = 2000  # sampled associativity triples above order 1000
    GROUP_TABLE_LIMIT: int = 2000  # full multiplication table stored up to this order

    # Execution Settings
    THREADS: int = 1
    DEFAULT_SEED: int = 0
    DEFAULT_TRIALS: int = 3
    GENERICITY_PRIME: int = 2147483647  # 2^31 - 1
    INCLUDE_TIMING: bool = False

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True)

@lru_cache()
def get_settings() -> Settings:
    """Get cached settings to avoid loading .env file multiple times"""
    return Settings()

def override_settings(**values: Any) -> Settings:
    """Apply command-line overrides to the cached settings instance"""
    current = get_settings()
    for key, value in values.items():
        if value is None:
            continue
        if not hasattr(current, key):
            raise AttributeError(f"Unknown setting: {key}")
        setattr(current, key, value)
    return current

settings = get_settings()
