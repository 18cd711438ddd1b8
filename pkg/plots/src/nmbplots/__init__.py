"""Figure-rendering scripts for the simulator's CSV output."""

from .render import KINDS, FigureRecipe, render
from .schema import SCHEMAS, SchemaError, read_csv

__version__ = "0.1.0"
