"""Morphs between right-triangle contact representations of plane triangulations.

Documents are plain dicts in the same JSON layout the command-line tool uses.
"""

import json

from . import _core


class RtmorphError(Exception):
    """Raised for every library error; ``kind`` names the error class."""

    def __init__(self, kind, message, diagnostics=()):
        super().__init__(message)
        self.kind = kind
        self.diagnostics = list(diagnostics)


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.Error as e:
        raise RtmorphError(*e.args) from None


def _s(doc):
    return None if doc is None else json.dumps(doc)


def initial_wood(graph, red):
    return json.loads(_call(_core.initial_wood, _s(graph), red))


def construct(graph, wood, tau):
    return json.loads(_call(_core.construct, _s(graph), _s(wood), _s(tau)))


def validate_rt(rep, graph=None):
    """List of (code, message) findings; empty when the representation is valid."""
    return _call(_core.validate_rt, _s(rep), _s(graph))


def extract(rep, graph=None):
    return json.loads(_call(_core.extract, _s(rep), _s(graph)))


def potential(graph, wood):
    return json.loads(_call(_core.potential, _s(graph), _s(wood)))


def decide(a, b, graph=None):
    return json.loads(_call(_core.decide, _s(a), _s(b), _s(graph)))


def morph(a, b, graph=None):
    return json.loads(_call(_core.morph, _s(a), _s(b), _s(graph)))


def render_frames(plan, frames=10, width=800, height=800):
    return _call(_core.render_frames, _s(plan), frames, width, height)


def render_animated(plan, frames=10, fps=10):
    return _call(_core.render_animated, _s(plan), frames, fps)


__all__ = [
    "RtmorphError",
    "initial_wood",
    "construct",
    "validate_rt",
    "extract",
    "potential",
    "decide",
    "morph",
    "render_frames",
    "render_animated",
]
