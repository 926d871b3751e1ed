import json
import os
from dataclasses import dataclass
from pathlib import Path

from src import constants
from src.errors import ConfigError
from src.logger import logger

# Configuration directory from env var, defaulting to current working directory
CONFIG_DIR = Path(os.environ.get("WSSIM_CONFIG_DIR", "."))
CONFIG_FILE = CONFIG_DIR / "config.json"

OUTPUT_FORMATS = ("json", "csv", "table")

DEFAULT_CONFIG = {
    "wordnet_dir": None,
    "weights": list(constants.DEFAULT_WEIGHTS),
    "stopword_file": None,
    "wsd_overlap_threshold": constants.DEFAULT_WSD_OVERLAP_THRESHOLD,
    "max_depth": constants.DEFAULT_MAX_DEPTH,
    "output_format": "json",
    "parallelism": 1,
    "allow_network": False,
    "positive_threshold": constants.DEFAULT_POSITIVE_THRESHOLD,
}

def load_config():
    """Load configuration from JSON file. Returns default if not found."""
    if not CONFIG_FILE.exists():
        return DEFAULT_CONFIG.copy()

    try:
        with open(CONFIG_FILE, 'r') as f:
            config = json.load(f)
            # Merge with defaults to ensure all keys exist
            return {**DEFAULT_CONFIG, **config}
    except Exception as e:
        logger.warning(f"Error loading config: {e}. Using defaults.")
        return DEFAULT_CONFIG.copy()

@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every CLI command."""
    wordnet_dir: Path | None
    weights: tuple[float, float, float]
    stopword_file: Path
    wsd_overlap_threshold: float = constants.DEFAULT_WSD_OVERLAP_THRESHOLD
    max_depth: int = constants.DEFAULT_MAX_DEPTH
    output_format: str = "json"
    parallelism: int = 1
    allow_network: bool = False
    positive_threshold: float = constants.DEFAULT_POSITIVE_THRESHOLD

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format: {self.output_format}")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be a positive integer")
        if self.max_depth < 1:
            raise ConfigError("max_depth must be a positive integer")
        if not 0.0 <= self.wsd_overlap_threshold <= 1.0:
            raise ConfigError("wsd_overlap_threshold must lie in [0, 1]")


def resolve_run_config(overrides: dict | None = None) -> RunConfig:
    """
    Build a RunConfig from defaults, config.json, the environment and overrides.

    Precedence: overrides (CLI flags) > environment > config file > defaults.
    Overrides set to None are ignored.
    """
    config = load_config()
    env_wordnet = os.environ.get(constants.WORDNET_ENV_VAR)
    if env_wordnet:
        config["wordnet_dir"] = env_wordnet
    for key, value in (overrides or {}).items():
        if value is not None:
            config[key] = value

    weights = config["weights"]
    if isinstance(weights, str):
        weights = [w for w in weights.split(",")]
    try:
        weights = tuple(float(w) for w in weights)
    except (TypeError, ValueError):
        raise ConfigError(f"Invalid weights: {config['weights']!r}")
    if len(weights) != 3:
        raise ConfigError(f"Expected three weights p1,p2,p3, got {len(weights)}")

    wordnet_dir = config.get("wordnet_dir")
    stopword_file = config.get("stopword_file") or constants.DEFAULT_STOPWORD_FILE

    return RunConfig(
        wordnet_dir=Path(wordnet_dir).expanduser() if wordnet_dir else None,
        weights=weights,
        stopword_file=Path(stopword_file).expanduser(),
        wsd_overlap_threshold=float(config["wsd_overlap_threshold"]),
        max_depth=int(config["max_depth"]),
        output_format=str(config["output_format"]),
        parallelism=int(config["parallelism"]),
        allow_network=bool(config["allow_network"]),
        positive_threshold=float(config["positive_threshold"]),
    )
