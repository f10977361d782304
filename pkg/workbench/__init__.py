"""Gadget construction and verification workbench for forbidden-subgraph families."""

__version__ = "1.0.0"
