"""Small point files shipped with the package (used by tests and demos)."""

from importlib.resources import files
from pathlib import Path

FIXTURES = (
    "counterexample_P.txt",
    "counterexample_Q.txt",
    "convergence_A.txt",
    "convergence_B.txt",
    "eps10_p.txt",
    "eps10_q.txt",
    "staircase.txt",
    "worked_P.txt",
    "worked_Q.txt",
)


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(f"no bundled fixture {name!r}")
    return Path(str(files(__name__) / name))
