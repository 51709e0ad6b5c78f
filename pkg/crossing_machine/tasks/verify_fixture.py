"""Task: re-certify the vendored 75-point record set.

Run manually or from CI:
    python -m crossing_machine.tasks.verify_fixture
"""

import logging
import sys

from crossing_machine.config import get_settings
from crossing_machine.fixtures import APPENDIX_CROSSINGS, load_appendix_set
from crossing_machine.service.bounds import bound_report
from crossing_machine.service.counter import count_crossings
from crossing_machine.service.oracle import oracle_count

logger = logging.getLogger(__name__)


def verify_fixture() -> bool:
    """Count the fixture with the sweep and the oracle; True when both give the recorded value."""
    settings = get_settings()
    points = load_appendix_set()

    sweep = count_crossings(points)
    brute = oracle_count(points, settings)
    report = bound_report(points.n, sweep, settings.bound_digits)

    logger.info(
        "Fixture check: n=%d sweep=%d oracle=%d expected=%d bound=%s (%s)",
        points.n,
        sweep,
        brute,
        APPENDIX_CROSSINGS,
        report.fraction,
        report.decimal,
    )
    ok = sweep == brute == APPENDIX_CROSSINGS
    if not ok:
        logger.error("Fixture check failed")
    return ok


if __name__ == "__main__":
    logging.basicConfig(
        level=get_settings().log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    sys.exit(0 if verify_fixture() else 1)
