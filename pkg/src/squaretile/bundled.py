"""Example tilings shipped with the package."""

from __future__ import annotations

from importlib import resources

from .dissection import Dissection, read_dissection

NAMES = ("fig1", "fig2", "frame", "two_plus_sqrt2", "two_minus_sqrt2")


def text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"no bundled tiling {name!r}; choose from {', '.join(NAMES)}")
    return resources.files("squaretile").joinpath("data", f"{name}.tiling").read_text(encoding="utf-8")


def load(name: str) -> Dissection:
    return read_dissection(text(name))
