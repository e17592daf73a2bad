import logging
from pathlib import Path
from typing import List, Optional

from vlink.errors import UnknownFixture, VlinkError
from vlink.gauss.vlink_gauss_code import parse
from vlink.gauss.vlink_gauss_diagram import GaussDiagram
from vlink.models import CorpusFixture

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).parent / "fixtures"
FIXTURE_SUFFIX = ".gauss"


class VlinkCorpusManager:
    """
    Read access to the committed fixture diagrams.

    A fixture file holds '#' comment lines followed by one Gauss code.

    Args:
        directory: Fixture directory; the packaged corpus when omitted
    """

    def __init__(self, directory: Optional[Path] = None):
        self.directory = Path(directory) if directory else FIXTURE_DIR

    def list_names(self) -> List[str]:
        return sorted(p.stem for p in self.directory.glob(f"*{FIXTURE_SUFFIX}"))

    def show(self, name: str) -> CorpusFixture:
        """
        Read one fixture.

        Args:
            name: Fixture name without suffix

        Returns:
            CorpusFixture: Code and comment lines
        """
        path = self.directory / f"{name}{FIXTURE_SUFFIX}"
        if not path.is_file():
            raise UnknownFixture(f"Unknown fixture {name!r}; available: {', '.join(self.list_names())}")
        notes, code_lines = [], []
        for line in path.read_text(encoding="utf-8").splitlines():
            stripped = line.strip()
            if stripped.startswith("#"):
                notes.append(stripped.lstrip("#").strip())
            elif stripped:
                code_lines.append(stripped)
        if len(code_lines) != 1:
            raise VlinkError(f"Fixture {name} must hold exactly one code line, found {len(code_lines)}")
        return CorpusFixture(name=name, code=code_lines[0], notes=notes)

    def load(self, name: str) -> GaussDiagram:
        return parse(self.show(name).code)

    def all(self) -> List[CorpusFixture]:
        return [self.show(name) for name in self.list_names()]
