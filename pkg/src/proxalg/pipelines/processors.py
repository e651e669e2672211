import asyncio
from abc import ABC, abstractmethod
from typing import Any


class Processor(ABC):
    """
    One step of an audit or reproduction run.

    Steps are plain synchronous computations over immutable spaces. process()
    hands run() to a worker thread, so the event loop stays free and the
    members of a parallel pipeline step overlap.
    """

    @abstractmethod
    def run(self, data: Any, context: dict) -> Any:
        """
        Computes this step's output.

        Args:
            data: The previous step's output (a dict for parallel steps).
            context: Run-wide objects shared by every step (settings, seed, trials).

        Returns:
            A dict of new keys for a parallel step, or the next step's input.
        """

    async def process(self, data: Any, context: dict) -> Any:
        return await asyncio.to_thread(self.run, data, context)
