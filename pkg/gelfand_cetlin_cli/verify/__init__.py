"""
Run the property suites and collect a single report
"""

import logging
import time
from pprint import pformat
from typing import Optional, Sequence

from gelfand_cetlin_cli.utils import elapsed_time_hms
from gelfand_cetlin_cli.verify.suites import SUITES, SuiteOptions, all_flags

logger = logging.getLogger(__name__)

RESULT_KEYS = ["suite", "passed", "cases", "max_residual", "details"]


def _validate_result_format(result: dict):
    """
    Check that a suite returned a dict with the expected keys
    """
    expected = {
        "suite": "<str>",
        "passed": "<boolean>",
        "cases": "<int>",
        "max_residual": "<float>",
        "details": "<list>",
    }
    for key in RESULT_KEYS:
        if key not in result:
            raise ValueError(
                "❌ Invalid verification suite. Must return a dict "
                f"with the following format: {pformat(expected)}"
            )


def run_suites(
    names: Optional[Sequence[str]] = None,
    options: Optional[SuiteOptions] = None,
) -> dict:
    """
    Run the named suites (all of them when names is empty) in a fixed order

    Returns:
        {"passed": bool, "elapsed": "HH:MM:SS", "suites": [result, ...]}
    """
    options = options or SuiteOptions()
    names = list(names or SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(
            f"❌ Unknown suites {unknown}, expected any of {list(SUITES)}"
        )

    start = time.time()
    results = []
    for name in SUITES:
        if name not in names:
            continue
        logger.info("🏭 Running verification suite %s", name)
        result = SUITES[name](options)
        _validate_result_format(result)
        if result["passed"]:
            logger.info(
                "✅ %s: %s cases, max residual %.3e",
                name,
                result["cases"],
                result["max_residual"],
            )
        else:
            failed = [d["case"] for d in result["details"] if not d["passed"]]
            logger.error("❌ %s failed on %s", name, failed)
        results.append(result)

    elapsed = elapsed_time_hms(start)
    passed = all(r["passed"] for r in results)
    logger.info(
        "%s Verified %s suites in %s", "✅" if passed else "❌", len(results), elapsed
    )
    return {"passed": passed, "elapsed": elapsed, "suites": results}
