"""
All configuration values for the CLI and library
"""

import os

from dotenv import find_dotenv, load_dotenv

# File paths and directories
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.dirname((__file__))))
ROOT_DATA_DIR = os.path.join(ROOT_DIR, "data")
LOG_DIR = os.path.join(ROOT_DATA_DIR, "logs")

DOTENV_PATH = find_dotenv()
if DOTENV_PATH:
    load_dotenv(DOTENV_PATH)

GC_LOG_LEVEL = os.environ.get("GC_LOG_LEVEL") or "info"
GC_WRITE_LOGS = os.environ.get("GC_WRITE_LOGS", "true").lower() in {
    "1",
    "true",
    "yes",
}
GC_SEED = int(os.environ.get("GC_SEED") or 0)
GC_MAX_STARTS = int(os.environ.get("GC_MAX_STARTS") or 400)
GC_OUTPUT_DIR = os.environ.get("GC_OUTPUT_DIR") or os.path.join(
    ROOT_DATA_DIR, "output"
)
SAMPLE_DATA_DIR = os.path.join(GC_OUTPUT_DIR, "samples")


config = {
    "logging": {
        "default_log_filename": "gelfand_cetlin_cli",
        "default_log_level": GC_LOG_LEVEL,
        "default_log_dir": LOG_DIR,
        "write_logs": GC_WRITE_LOGS,
    },
    "polytope": {
        "default_coord_order": "bottom-up",
        # Pulling triangulation is exact but grows quickly with N
        "triangulation_max_dim": 6,
        "lattice_point_limit": 500000,
    },
    "gcsystem": {
        "construction_tol": 1e-12,
        "spectrum_tol": 1e-9,
        "round_trip_tol": 1e-8,
        "rejection_batch_size": 4096,
        "rejection_max_batches": 2000,
    },
    "degeneration": {
        "weight_base": 3,
        "normalization_tol": 1e-9,
        "family_tol": 1e-10,
    },
    "potential": {
        "seed": GC_SEED,
        "max_starts": GC_MAX_STARTS,
        "phase_roots": 6,
        "newton_max_iter": 200,
        "newton_max_step": 1.0,
        "gradient_tol": 1e-10,
        "critical_tol": 1e-8,
        "dedup_tol": 1e-8,
        # log-units allowed between log|y| and log T times the polytope box
        "root_box_margin": 5.0,
        "hessian_tol": 1e-8,
        "valuation_eps": [1e-2, 1e-3, 1e-4],
        "continuation_step": 0.05,
        "continuation_min_step": 1e-4,
        "continuation_max_jump": 0.5,
    },
    "toda": {
        "fd_step": 1e-6,
        "level_set_tol": 1e-6,
        "identity_tol": 1e-12,
    },
    "verify": {
        "seed": GC_SEED,
        "samples": 100,
        "gc_samples": 1000,
        "round_trips": 200,
        "max_n": 4,
    },
    "cli": {
        "json_indent": 2,
    },
    "sampling": {"output_dir": SAMPLE_DATA_DIR},
}
