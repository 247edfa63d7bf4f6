"""Fano hosts for smooth complete intersections via the Cayley trick."""
