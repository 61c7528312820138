"""Configuration management."""
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .clients.fixture_client import DEFAULT_DATA_DIR


@dataclass
class Config:
    """Application configuration."""

    threads: int = 1  # Worker cap for batch commands
    data_dir: Path = DEFAULT_DATA_DIR  # Where reproduction fixtures live
    quiet: bool = False  # Silence progress output on stderr
    debug: bool = False  # Library DEBUG logging

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> 'Config':
        """Load configuration from environment variables and an optional .env file."""
        load_dotenv(dotenv_path)

        threads_text = os.getenv('METROFAN_THREADS', '1')
        data_dir = os.getenv('METROFAN_DATA_DIR', '')
        quiet = os.getenv('METROFAN_QUIET', '').lower() in ('1', 'true', 'yes')
        debug = bool(os.getenv('METROFAN_DEBUG', ''))

        try:
            threads = int(threads_text)
        except ValueError:
            threads = 0
        if threads < 1:
            raise ValueError("METROFAN_THREADS must be a positive integer")

        path = Path(data_dir) if data_dir else DEFAULT_DATA_DIR
        if not path.is_dir():
            raise ValueError(f"METROFAN_DATA_DIR {path} is not a directory")

        return cls(threads=threads, data_dir=path, quiet=quiet, debug=debug)
