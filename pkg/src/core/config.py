import logging
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from sympy import isprime


class Settings(BaseSettings):
    """
    Central runtime configuration.
    Values are loaded from PADIC_DESK_* environment variables or a .env file.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        env_prefix="PADIC_DESK_",
    )

    default_prime: int = 5
    precision: int = 8
    pi_precision: int = 40
    series_order: int = 50

    output_format: str = "text"

    @field_validator("output_format", mode="before")
    @classmethod
    def validate_format(cls, v):
        """Accept text or json-doc, fall back to text otherwise."""
        valid_formats = ["text", "json-doc"]
        if v and str(v).lower() in valid_formats:
            return str(v).lower()
        logger = logging.getLogger("padic-desk")
        if v:
            logger.warning(f"Invalid output format '{v}'. Using 'text' instead.")
        return "text"

    data_dir: str = "data"
    seed: int = 20240501
    threads: int = 1

    # Unit-root limit: largest level m and the term limit for the m+2 cross-check
    fp_max_level: int = 12
    fp_crosscheck_max_terms: int = 5000
    # Largest truncation the special-value check evaluates through the limit
    fp_limit_max_terms: int = 500_000

    radius_tolerance: float = 0.05
    log_level: str = "INFO"
    report_timing: bool = True

    @field_validator("report_timing", mode="before")
    @classmethod
    def parse_bool(cls, v):
        if isinstance(v, str):
            return v.lower() in ("true", "1", "yes")
        return bool(v)

    @field_validator("precision", "pi_precision", "series_order", "threads", "fp_max_level", mode="before")
    @classmethod
    def positive(cls, v):
        if int(v) < 1:
            raise ValueError("must be a positive integer")
        return int(v)


settings = Settings()


class CliConfig(BaseModel):
    """Per-invocation configuration: settings overridden by command-line flags."""

    p: int
    prec: int
    pi_prec: int
    order: int
    output_format: str = "text"
    data_dir: Path
    seed: int
    threads: int = 1
    out: Optional[Path] = None

    @field_validator("p")
    @classmethod
    def prime(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"p must be prime, got {v}")
        return v

    @field_validator("prec", "pi_prec", "order", "threads")
    @classmethod
    def at_least_one(cls, v: int) -> int:
        if v < 1:
            raise ValueError("precisions, orders and thread counts must be >= 1")
        return v

    @field_validator("output_format")
    @classmethod
    def known_format(cls, v: str) -> str:
        if v not in ("text", "json-doc"):
            raise ValueError(f"unknown format {v!r}")
        return v

    @model_validator(mode="after")
    def data_dir_exists(self) -> "CliConfig":
        if not self.data_dir.is_dir():
            raise ValueError(f"data directory {self.data_dir} does not exist")
        return self

    @classmethod
    def from_settings(cls, base: Settings, **overrides) -> "CliConfig":
        values = {
            "p": base.default_prime,
            "prec": base.precision,
            "pi_prec": base.pi_precision,
            "order": base.series_order,
            "output_format": base.output_format,
            "data_dir": Path(base.data_dir),
            "seed": base.seed,
            "threads": base.threads,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
