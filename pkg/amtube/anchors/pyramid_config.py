# Copyright (c) 2019, amtube developers
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
#
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS
# BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY,
# OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF
# THE POSSIBILITY OF SUCH DAMAGE.
import hashlib
import json

import yaml

from amtube.exceptions import ValidationError

# SSD300 defaults
DEFAULT_GRID_SIZES = [38, 19, 10, 5, 3, 1]
DEFAULT_SHAPES_PER_CELL = [4, 6, 6, 6, 4, 4]
DEFAULT_SCALES = [0.10, 0.20, 0.375, 0.55, 0.725, 0.90]
DEFAULT_LAST_SCALE = 1.05
DEFAULT_ASPECT_RATIOS = [
    [1.0, 2.0, 0.5],
    [1.0, 2.0, 0.5, 3.0, 1.0 / 3.0],
    [1.0, 2.0, 0.5, 3.0, 1.0 / 3.0],
    [1.0, 2.0, 0.5, 3.0, 1.0 / 3.0],
    [1.0, 2.0, 0.5],
    [1.0, 2.0, 0.5],
]


class PyramidConfig:
    """
    Geometry of the P level anchor pyramid.

    Parameters
    ----------
        grid_sizes: list of int
            Side of the square feature grid at each level, finest first
        shapes_per_cell: list of int
            Number of anchor shapes r_p per grid cell
        scales: list of float
            Anchor scale at each level as a fraction of the image side
        aspect_ratios: list of list of float
            Width/height ratios per level. The first ratio of each level is
            the base square when it is 1.
        extra_square: list of bool, optional
            Add the square of side sqrt(s_p * s_(p+1)) after the first ratio
        last_scale: float, optional
            s_(P+1), used by the extra square of the last level
    """
    fields = ["grid_sizes", "shapes_per_cell", "scales", "aspect_ratios",
              "extra_square", "last_scale"]

    def __init__(self,
                 grid_sizes=None,
                 shapes_per_cell=None,
                 scales=None,
                 aspect_ratios=None,
                 extra_square=None,
                 last_scale=DEFAULT_LAST_SCALE):
        self.grid_sizes = [int(g) for g in (
            grid_sizes if grid_sizes is not None else DEFAULT_GRID_SIZES)]
        self.shapes_per_cell = [int(r) for r in (
            shapes_per_cell if shapes_per_cell is not None
            else DEFAULT_SHAPES_PER_CELL)]
        self.scales = [float(s) for s in (
            scales if scales is not None else DEFAULT_SCALES)]
        self.aspect_ratios = [[float(a) for a in level] for level in (
            aspect_ratios if aspect_ratios is not None
            else DEFAULT_ASPECT_RATIOS)]
        if extra_square is None:
            extra_square = [True] * len(self.grid_sizes)
        self.extra_square = [bool(e) for e in extra_square]
        self.last_scale = float(last_scale)
        self.validate()

    @property
    def num_levels(self):
        return len(self.grid_sizes)

    def validate(self):
        lengths = {len(self.grid_sizes), len(self.shapes_per_cell),
                   len(self.scales), len(self.aspect_ratios),
                   len(self.extra_square)}
        if len(lengths) != 1 or not self.grid_sizes:
            raise ValidationError(
                "Pyramid config lists must all have the same non-zero length")

        if any(g < 1 for g in self.grid_sizes):
            raise ValidationError("Grid sizes must be positive")

        if any(a <= b for a, b in zip(self.grid_sizes, self.grid_sizes[1:])):
            raise ValidationError("Grid sizes must be strictly decreasing")

        if any(s <= 0 for s in self.scales) or self.last_scale <= 0:
            raise ValidationError("Anchor scales must be positive")

        for p, ratios in enumerate(self.aspect_ratios):
            if any(a <= 0 for a in ratios):
                raise ValidationError(
                    "Aspect ratios must be positive at level %d" % p)
            expected = len(ratios) + (1 if self.extra_square[p] else 0)
            if expected != self.shapes_per_cell[p]:
                raise ValidationError(
                    "Level %d declares %d shapes per cell but its aspect "
                    "ratios give %d" % (p, self.shapes_per_cell[p], expected))

    def to_dict(self):
        return {field: getattr(self, field) for field in self.fields}

    @classmethod
    def from_dict(cls, values):
        unknown = set(values) - set(cls.fields)
        if unknown:
            raise ValidationError(
                "Unknown pyramid config keys: %s" % sorted(unknown))
        return cls(**values)

    @classmethod
    def from_yaml(cls, path):
        with open(path) as f:
            values = yaml.safe_load(f) or {}
        return cls.from_dict(values)

    def config_hash(self):
        """
        Stable digest of the geometry. Stamped into every artifact built
        from these anchors.
        """
        canonical = json.dumps(self.to_dict(), sort_keys=True,
                               separators=(",", ":"))
        return hashlib.sha1(canonical.encode("utf-8")).hexdigest()

    def __eq__(self, other):
        return isinstance(other, PyramidConfig) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "PyramidConfig(grid_sizes=%s, shapes_per_cell=%s)" % (
            self.grid_sizes, self.shapes_per_cell)
