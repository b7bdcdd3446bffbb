"""Exact bigraded Poincare series, Kostka-Macdonald tables and characteristic
cycles for the punctual Hilbert scheme of points in the plane."""

__version__ = "0.1.0"
