from jinja2 import Environment, FileSystemLoader
from pathlib import Path
import logging

from proxalg.models.document import ReportDocument

logger = logging.getLogger(__name__)

class ReportRenderer:
    """
    Renders ReportDocuments as text (through Jinja2 templates) or as flat
    key=value documents.
    """
    def __init__(self, template_folder: Path | None = None):
        template_folder = template_folder or Path(__file__).parent.parent / "templates"
        logger.info(f"Loading report templates from: {template_folder.resolve()}")
        self.env = Environment(
            loader=FileSystemLoader(str(template_folder)),
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render(self, document: ReportDocument, output_format: str = "text") -> str:
        if output_format == "kv":
            return to_kv(document.entries)
        template = self.env.get_template("report.txt.jinja2")
        width = max((len(key) for key in document.entries), default=0)
        return template.render(document=document, width=width)


def to_kv(entries: dict[str, str]) -> str:
    return "".join(f"{key}={value}\n" for key, value in entries.items())


def parse_kv(text: str) -> dict[str, str]:
    entries = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        entries[key.strip()] = value.strip()
    return entries
