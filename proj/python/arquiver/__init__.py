"""Homological algebra and strip geometry of continuous type-A quivers."""

from ._core import (
    DomainError,
    Quiver,
    ar_sequence,
    classify,
    ext,
    gamma,
    hom,
    metric,
    parse_interval,
    position,
    render_strip,
    triangle,
    verify,
)

__all__ = [
    "DomainError",
    "Quiver",
    "ar_sequence",
    "classify",
    "ext",
    "gamma",
    "hom",
    "metric",
    "parse_interval",
    "position",
    "render_strip",
    "triangle",
    "verify",
]
