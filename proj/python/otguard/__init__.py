"""Vertex guarding of 1.5D orthogonal terrains.

Thin wrapper over the native extension: exact and 2-approximate guard set
solvers, a brute-force visibility oracle, a seeded terrain generator and an
SVG renderer.
"""

try:
    from otguard._otguard import *  # noqa: F401,F403  (installed layout)
except ImportError:  # development layout: extension next to the package dir
    from _otguard import *  # noqa: F401,F403
