"""
Job Runner
Runs catalog jobs inline or on a process pool, always returning reports in job order
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Sequence

from .catalog import Job, run_job
from .reports import VerifyReport

logger = logging.getLogger(__name__)


def iter_reports(jobs: Sequence[Job], workers: int = 1) -> Iterator[VerifyReport]:
    """Yield the reports of every job in job order.

    Args:
        jobs: (tag, params) pairs from `expand_jobs`
        workers: process count; 1 runs in the calling process

    Yields:
        reports in the order of `jobs`, independent of `workers`
    """
    workers = max(1, min(workers, len(jobs) or 1))
    logger.info(f"running {len(jobs)} jobs on {workers} worker(s)")
    if workers == 1:
        for job in jobs:
            yield from run_job(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order
        for reports in pool.map(run_job, jobs):
            yield from reports


def run_jobs(jobs: Sequence[Job], workers: int = 1) -> List[VerifyReport]:
    return list(iter_reports(jobs, workers))
