"""
I/O Utilities for File Handling

JSON reports and CSV tables. JSON output is deterministic: keys keep their
insertion order, rationals become "p/q" strings, complex numbers become
[re, im] pairs and floats are written with their shortest round-trip repr.
"""

import logging
import os
from fractions import Fraction

import json
import numpy
import pandas as pd

logger = logging.getLogger(__name__)


def to_jsonable(data):
    """
    Recursively convert library values into JSON serializable Python values
    """
    if isinstance(data, dict):
        return {str(k): to_jsonable(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_jsonable(v) for v in data]
    if isinstance(data, numpy.ndarray):
        return [to_jsonable(v) for v in data.tolist()]
    if isinstance(data, (bool, numpy.bool_)):
        return bool(data)
    if isinstance(data, Fraction):
        return str(data)
    if isinstance(data, (int, numpy.integer)):
        return int(data)
    if isinstance(data, (float, numpy.floating)):
        return float(data)
    if isinstance(data, (complex, numpy.complexfloating)):
        return [float(data.real), float(data.imag)]
    if hasattr(data, "to_dict"):
        return to_jsonable(data.to_dict())
    return data


def dumps_json(data, **kwargs) -> str:
    """
    Serialize data into a deterministic JSON string
    """
    if "indent" not in kwargs:
        kwargs["indent"] = 2
    if "sort_keys" not in kwargs:
        kwargs["sort_keys"] = False
    return json.dumps(to_jsonable(data), **kwargs)


def read_json(filepath: str, default: any = None):
    """
    Read JSON file into Python dict. If default is not None and the file
    does not exist, then return default.
    """
    if (default is not None) and (not os.path.isfile(filepath)):
        return default

    with open(filepath, "r") as json_file:
        return json.load(json_file)


def write_json(data: dict, filepath: str, **kwargs):
    """
    Write Python data to JSON file.
    """
    dirname = os.path.dirname(filepath)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(filepath, "w") as json_file:
        json_file.write(dumps_json(data, **kwargs))
        json_file.write("\n")
    return filepath


def write_points_csv(points, filepath: str, prefix: str = "u") -> str:
    """
    Write a list of coordinate vectors to a CSV file with columns u1..uN

    Rational coordinates are written as "p/q" strings
    """
    rows = [[to_jsonable(c) for c in p] for p in points]
    ncols = len(rows[0]) if rows else 0
    df = pd.DataFrame(rows, columns=[f"{prefix}{i + 1}" for i in range(ncols)])

    dirname = os.path.dirname(filepath)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    df.to_csv(filepath, index=False)
    logger.info("✅ Wrote %s rows to %s", df.shape[0], filepath)

    return filepath
