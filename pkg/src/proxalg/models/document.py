from typing import List, Dict

from pydantic import BaseModel, Field


class ReportDocument(BaseModel):
    """
    A command's output. `entries` is a flat key/value mapping whose insertion
    order is the serialization order; `summary` holds the human-readable lines.
    """
    command: str = Field(..., description="Name of the command that produced the document.")
    summary: List[str] = Field(default_factory=list)
    entries: Dict[str, str] = Field(default_factory=dict)
    exit_code: int = 0
