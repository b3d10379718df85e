"""Exact v-numbers of Stanley-Reisner ideals and related invariants."""

__version__ = "0.1.0"
