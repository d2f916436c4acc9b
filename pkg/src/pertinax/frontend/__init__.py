from .parser import parse
from .runner import run

__all__ = ["parse", "run"]
