"""Chaskiq -- mine Quechua neologism candidates from pronunciation dictionaries."""

__version__ = "0.3.0"
