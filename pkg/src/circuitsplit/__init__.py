"""Electrical invariants of circular and cactus networks and their circular split systems."""
