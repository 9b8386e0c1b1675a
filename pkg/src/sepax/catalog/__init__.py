"""
Named example spaces and the constructors that build them.
"""

from .constructors import (
    attachment_space,
    khalimsky_interval,
    open_point_space,
    product,
    sierpinski,
    subspace,
)
from .entries import CatalogEntry, Claim, catalog, implied_claims, lookup

__all__ = [
    "CatalogEntry",
    "Claim",
    "attachment_space",
    "catalog",
    "implied_claims",
    "khalimsky_interval",
    "lookup",
    "open_point_space",
    "product",
    "sierpinski",
    "subspace",
]
