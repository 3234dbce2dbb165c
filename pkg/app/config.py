"""Runtime configuration: output location and numeric defaults."""
import os
from pathlib import Path

# Determine output path
if os.environ.get("MAXCUT_OUTPUT_DIR"):
    OUTPUT_DIR = Path(os.environ["MAXCUT_OUTPUT_DIR"])
elif os.path.exists("/data"):
    # Production on Fly.io - use volume
    OUTPUT_DIR = Path("/data/maxcut")
else:
    # Development - use local directory
    OUTPUT_DIR = Path("./output")

# Integrator defaults (RKF45, dimensionless flow time)
RTOL = 1e-3
ATOL = 1e-6
GRAD_TOL = 1e-6
T_MAX = 1e4
MIN_STEP = 1e-12
INITIAL_STEP = 1e-2

# Oscillator defaults
DEFAULT_MU = 1.0  # cosine oscillator flow
DEFAULT_MU_GENERAL = 0.0  # generalized couplings binarize without a penalty
DEFAULT_K = 1.0

BINARIZATION_EPS = 0.15
ROUNDING_TRIALS = 100

# Coupling analysis
RATIO_GRID_POINTS = 10_000
CLASS_G_TOL = 1e-6

ORACLE_MAX_N = 30


def init_output_dir() -> Path:
    """Create the output directory if needed and return it."""
    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    return OUTPUT_DIR
