"""Dimensions of simple modules for higher Jones algebras."""

from ._core import (
    AlgebraConfig,
    decompose,
    simple_dims,
    table,
    verify_fixtures,
    verify_laws,
    verify_oracles,
)

__all__ = [
    "AlgebraConfig",
    "decompose",
    "simple_dims",
    "table",
    "verify_fixtures",
    "verify_laws",
    "verify_oracles",
]
