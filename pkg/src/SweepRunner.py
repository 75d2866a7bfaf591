"""
Sweep orchestration: enumerate parameter points in canonical order, run the
checks (inline or on a process pool) and hand records to an emitter in that
same order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from rich.progress import Progress, TaskID

from config import CHUNK_SIZE, MAX_WORKERS
from src.CheckRegistry import CheckEntry, execute
from src.ReportEmitter import to_record
from src.exact_math import DomainError

logger = logging.getLogger(__name__)

Task = Tuple[str, str, Dict[str, Any]]


def run_task(task: Task) -> Dict[str, Any]:
    """Worker entry point; module-level so it pickles."""
    group, check_id, point = task
    return to_record(execute(group, check_id, point))


@dataclass
class SweepSummary:
    total: int = 0
    failures: int = 0
    stopped_early: bool = False

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0


def build_tasks(group: str, entry: CheckEntry, ranges: Dict[str, Tuple[int, int]],
                choices: Optional[Dict[str, Sequence[Any]]] = None) -> List[Task]:
    """
    Cartesian product of the ranges in the entry's parameter order, each
    range ascending, filtered by the entry's validity predicate.
    """
    choices = choices or {}
    axes: List[Sequence[Any]] = []
    for name in entry.params:
        if name in entry.choices:
            allowed = entry.choices[name]
            chosen = [c for c in allowed if c in choices.get(name, allowed)]
            if not chosen:
                raise DomainError(f"no valid value of {name} for {entry.check_id}; "
                                  f"allowed {list(allowed)}")
            axes.append(chosen)
        else:
            if name not in ranges:
                raise DomainError(f"missing range for parameter {name} of {entry.check_id}")
            lo, hi = ranges[name]
            axes.append(range(lo, hi + 1))

    tasks: List[Task] = []
    for values in product(*axes):
        point = dict(zip(entry.params, values))
        if entry.is_valid(point):
            tasks.append((group, entry.check_id, point))
    logger.debug(f"Built {len(tasks)} tasks for {group} {entry.check_id}")
    return tasks


class SweepRunner:
    """Runs a list of tasks and streams their records in task order."""

    def __init__(self,
                 jobs: int = MAX_WORKERS,
                 fail_fast: bool = False,
                 chunk_size: int = CHUNK_SIZE,
                 progress: Optional[Progress] = None):
        if jobs < 1:
            raise DomainError(f"worker count must be at least 1, got {jobs}")
        self.jobs = jobs
        self.fail_fast = fail_fast
        self.chunk_size = chunk_size
        self.progress = progress

    def _records(self, tasks: Sequence[Task]) -> Iterator[Dict[str, Any]]:
        if self.jobs == 1 or len(tasks) <= 1:
            for task in tasks:
                yield run_task(task)
            return
        executor = ProcessPoolExecutor(max_workers=self.jobs)
        try:
            yield from executor.map(run_task, tasks, chunksize=self.chunk_size)
        finally:
            executor.shutdown(wait=True, cancel_futures=True)

    def run(self, tasks: Sequence[Task], emit: Callable[[Dict[str, Any]], None],
            only_failures: bool = False) -> SweepSummary:
        """
        Execute every task and emit its record.

        Args:
            tasks: tasks in canonical order
            emit: receives each record, in task order
            only_failures: emit failing records only (probe mode)

        Returns:
            SweepSummary with counts; with fail-fast the sweep stops after
            the first failing record.
        """
        summary = SweepSummary()
        label = tasks[0][1] if tasks else "-"
        logger.info(f"Starting sweep of {len(tasks)} checks ({label}) on {self.jobs} worker(s)")

        progress_task: Optional[TaskID] = None
        if self.progress:
            progress_task = self.progress.add_task(f"Checking {label}", total=len(tasks))

        records = self._records(tasks)
        try:
            for record in records:
                summary.total += 1
                failed = not record["pass"]
                if failed:
                    summary.failures += 1
                if failed or not only_failures:
                    emit(record)
                if self.progress and progress_task is not None:
                    self.progress.update(progress_task, advance=1)
                if failed and self.fail_fast:
                    summary.stopped_early = summary.total < len(tasks)
                    logger.error(f"Stopping at first failure: {record['check']} {record['params']}")
                    break
        finally:
            records.close()

        logger.info(f"Sweep finished: {summary.total} checked, {summary.failures} failing"
                    + (" (stopped early)" if summary.stopped_early else ""))
        return summary


def run_sweep(tasks: Iterable[Task], emit: Callable[[Dict[str, Any]], None],
              jobs: int = MAX_WORKERS, fail_fast: bool = False,
              progress: Optional[Progress] = None, only_failures: bool = False) -> SweepSummary:
    runner = SweepRunner(jobs=jobs, fail_fast=fail_fast, progress=progress)
    return runner.run(list(tasks), emit, only_failures=only_failures)
