from collections.abc import Sequence

from orthocode.cli.main import main, run

__all__: Sequence[str] = ["main", "run"]
