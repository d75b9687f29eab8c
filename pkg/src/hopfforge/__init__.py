"""hopfforge: verify and catalog pointed Hopf algebras in positive characteristic."""

from .cli import app

__all__ = ["app"]
