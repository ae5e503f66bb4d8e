"""Word algebra, extension graphs and embedding / universal-equivalence deciders
for partially commutative groups."""
from .graphs import Graph, GraphFormatError
from .words import Word, normal_form, parse_word

__version__ = "0.1.0"

__all__ = ["Graph", "GraphFormatError", "Word", "normal_form", "parse_word"]
