# File: parallel.py
# Description: Seeded sharding of Monte Carlo work over a process pool.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np


_logger = logging.getLogger(__name__)

THREADS_ENVIRONMENT_VARIABLE = 'SYRLAB_THREADS'


class ParallelRunner:
    """
    Splits nsamples into fixed-size shards, each with its own child seed, and runs them in order.

    The shard list and seeds depend only on (seed, nsamples, shard_size), so merged results do not
    depend on the worker count.
    """

    @staticmethod
    def resolve_threads(threads: int = None) -> int:
        """
        Worker count from the flag, then SYRLAB_THREADS, then the hardware.

        :param threads: int, explicit count; None or 0 defers to the environment
        :return: int, at least 1

        :raises ValueError: if a count is negative or the environment value is not an integer
        """

        if threads is not None and threads < 0:
            raise ValueError('thread count must be nonnegative')
        if threads:
            return threads

        environment_value = os.environ.get(THREADS_ENVIRONMENT_VARIABLE, '').strip()
        if environment_value:
            try:
                count = int(environment_value)
            except ValueError:
                raise ValueError(f'{THREADS_ENVIRONMENT_VARIABLE} must be an integer')
            if count < 0:
                raise ValueError(f'{THREADS_ENVIRONMENT_VARIABLE} must be nonnegative')
            if count:
                return count

        return os.cpu_count() or 1

    @staticmethod
    def shard_plan(nsamples: int, shard_size: int) -> list:
        """
        :param nsamples: int, total sample count
        :param shard_size: int, samples per shard
        :return: list, sample counts per shard; all but the last equal shard_size
        """

        if nsamples < 0:
            raise ValueError('sample count must be nonnegative')
        if shard_size < 1:
            raise ValueError('shard size must be positive')

        full, rest = divmod(nsamples, shard_size)
        plan = [shard_size] * full
        if rest:
            plan.append(rest)

        return plan

    @staticmethod
    def shard_seeds(seed: int, nshards: int) -> list:
        """
        :return: list, np.random.SeedSequence children of seed, one per shard
        """

        return np.random.SeedSequence(seed).spawn(nshards)

    @staticmethod
    def run_sharded(worker, payload, nsamples: int, seed: int, shard_size: int, threads: int = None) -> list:
        """
        Run worker(payload, count, seed_sequence) on every shard.

        worker must be a module-level function so it can be sent to a process pool.

        :param worker: callable
        :param payload: picklable, shared read-only input
        :param nsamples: int, total samples
        :param seed: int, root seed
        :param shard_size: int, samples per shard
        :param threads: int, worker count, see resolve_threads
        :return: list, partial results in shard order
        """

        plan = ParallelRunner.shard_plan(nsamples, shard_size)
        seeds = ParallelRunner.shard_seeds(seed, len(plan))
        workers = min(ParallelRunner.resolve_threads(threads), max(1, len(plan)))
        _logger.debug('running %d shards on %d workers', len(plan), workers)

        if workers == 1:
            partials = [worker(payload, count, seed_sequence) for count, seed_sequence in zip(plan, seeds)]
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [executor.submit(worker, payload, count, seed_sequence)
                           for count, seed_sequence in zip(plan, seeds)]
                partials = [future.result() for future in futures]

        return partials
