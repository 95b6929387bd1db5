from __future__ import annotations

SIGMA_FLOOR: float = 1e-12
MODEL_FORMAT_VERSION: int = 1
OUTPUT_DIR_ENV_VAR: str = 'GEMLP_OUTPUT_DIR'
DEFAULT_OUTPUT_DIR: str = 'gemlp-out'
DEFAULT_HIDDEN_LAYERS: tuple[int, ...] = (12, 12)
