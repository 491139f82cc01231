"""operadix: exact-arithmetic workbench for combinatorial operad models."""

__version__ = "0.1.0"
