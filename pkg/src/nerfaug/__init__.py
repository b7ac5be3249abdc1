"""NeRF-based training-set augmentation for 6D pose estimation, at desk scale.

The package covers the full pipeline: a procedural ground-truth scene and
renderer (`scene_synth`), an appearance-conditioned radiance field (`field`),
volume rendering (`renderer`), a from-scratch gradient engine and Adam loop
(`trainer`), the three augmentation axes -- viewpoint, appearance
interpolation/extrapolation, texture randomization -- (`augment`), a posed
image-set interchange format (`dataset_io`), pose-error metrics (`metrics`),
and a small pose-regression probe for A/B generalization experiments
(`probe`).  `cli` wires the stages into subcommands.
"""

__version__ = "0.1.0"

from . import (  # noqa: F401
    augment,
    dataset_io,
    field,
    geometry,
    metrics,
    probe,
    renderer,
    scene_synth,
    trainer,
)
