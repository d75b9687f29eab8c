"""Run the hopfforge test suite, installing the test extra when pytest is missing.

Slow tests (the parallel catalog sweep) are deselected unless ``--slow`` is given;
every other argument is passed through to pytest.
"""

from __future__ import annotations

import importlib.util
import subprocess
import sys
from pathlib import Path
from typing import List

ROOT = Path(__file__).resolve().parent.parent
TEST_EXTRA = ".[test]"


def _pytest_available() -> bool:
    return importlib.util.find_spec("pytest") is not None


def _install_test_extra() -> None:
    print("pytest not found; installing the test extra...", file=sys.stderr)
    subprocess.run([sys.executable, "-m", "pip", "install", "-e", TEST_EXTRA], cwd=ROOT, check=True)


def _pytest_args(argv: List[str]) -> List[str]:
    if "--slow" in argv:
        return [arg for arg in argv if arg != "--slow"]
    if any(arg == "-m" or arg.startswith("-m=") for arg in argv):
        return list(argv)
    return ["-m", "not slow", *argv]


def main() -> int:
    if not _pytest_available():
        try:
            _install_test_extra()
        except subprocess.CalledProcessError as exc:
            raise SystemExit(f"Failed to install test dependencies: {exc}") from exc
    result = subprocess.run([sys.executable, "-m", "pytest", *_pytest_args(sys.argv[1:])], cwd=ROOT)
    return result.returncode


if __name__ == "__main__":
    raise SystemExit(main())
