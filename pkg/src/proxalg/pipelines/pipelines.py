import asyncio
import logging
from typing import Any, List, Union

from proxalg.exceptions import PipelineError
from proxalg.pipelines.processors import Processor

logger = logging.getLogger(__name__)

Step = Union[Processor, List[Processor]]


class Pipeline:
    """
    Runs processors in order. A list of processors is a parallel step: every
    member gets its own copy of the current data dict and runs in a worker
    thread, and the dicts they return are merged in list order, so the result
    does not depend on which thread finishes first.
    """

    def __init__(self, processors: List[Step]):
        self.processors = processors

    async def _execute_sequential_step(self, processor: Processor, data: Any, context: dict) -> Any:
        processor_name = type(processor).__name__
        logger.info(f"Running {processor_name}...")
        try:
            data = await processor.process(data, context)
        except Exception as e:
            logger.error(f"{processor_name} failed: {e}")
            raise
        logger.info(f"{processor_name} completed.")
        return data

    async def _execute_parallel_step(self, processors: List[Processor], data: Any, context: dict) -> dict:
        if not isinstance(data, dict):
            raise PipelineError(f"A parallel step needs dict input, got {type(data).__name__}")

        names = [type(processor).__name__ for processor in processors]
        logger.info(f"Running {', '.join(names)} in parallel...")
        results = await asyncio.gather(
            *(processor.process(dict(data), context) for processor in processors),
            return_exceptions=True,
        )

        merged = dict(data)
        for name, result in zip(names, results):
            if isinstance(result, Exception):
                logger.error(f"Parallel processor {name} failed: {result}")
                raise result
            if not isinstance(result, dict):
                raise PipelineError(f"Parallel processor {name} returned {type(result).__name__}, expected dict")
            merged.update(result)

        logger.info("Parallel step completed.")
        return merged

    async def execute(self, data: Any, context: dict) -> Any:
        """
        Passes data through every step and returns the last step's output.

        Args:
            data: Input of the first step.
            context: Run-wide objects shared by every step.
        """
        logger.info(f"Starting pipeline with {len(self.processors)} steps...")
        for step in self.processors:
            if isinstance(step, list):
                data = await self._execute_parallel_step(step, data, context)
            else:
                data = await self._execute_sequential_step(step, data, context)
        logger.info("Pipeline completed.")
        return data
