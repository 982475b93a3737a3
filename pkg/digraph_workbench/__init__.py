"""digraph-workbench: constructions and checks for the digraph degree-diameter problem"""

__version__ = '0.1.0'
