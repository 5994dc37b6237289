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
import logging
import math

import numpy as np

from amtube.exceptions import ValidationError

logger = logging.getLogger(__name__)


class AnchorSet:
    """
    Anchor boxes of every pyramid level. ``levels[p]`` is a read-only array
    of shape (H'_p * W'_p, r_p, 4) indexed by row-major cell then shape.
    Anchors are not clipped to the image.
    """

    def __init__(self, config, levels):
        self.config = config
        self.levels = levels
        for level in self.levels:
            level.setflags(write=False)

    @property
    def num_levels(self):
        return len(self.levels)

    @property
    def config_hash(self):
        return self.config.config_hash()

    def grid_size(self, level):
        return self.config.grid_sizes[level]

    def num_cells(self, level):
        return self.levels[level].shape[0]

    def shapes_per_cell(self, level):
        return self.levels[level].shape[1]

    def level_counts(self):
        return [level.shape[0] * level.shape[1] for level in self.levels]

    def __len__(self):
        return sum(self.level_counts())

    def anchor(self, level, cell, shape):
        return self.levels[level][cell, shape]

    def cell_of(self, level, point):
        return cell_of(self.grid_size(level), point)


def _shape_sizes(config, level):
    """
    (width, height) of every anchor shape at one level, in shape order
    """
    scale = config.scales[level]
    next_scale = (config.scales[level + 1]
                  if level + 1 < config.num_levels else config.last_scale)
    sizes = [(scale * math.sqrt(a), scale / math.sqrt(a))
             for a in config.aspect_ratios[level]]
    if config.extra_square[level]:
        side = math.sqrt(scale * next_scale)
        sizes.insert(1, (side, side))
    return np.array(sizes, dtype=np.float64)


def build_pyramid(config):
    """
    Construct the anchor geometry for a pyramid config
    :param config: PyramidConfig
    :return: AnchorSet
    """
    config.validate()
    levels = []
    for p, grid in enumerate(config.grid_sizes):
        sizes = _shape_sizes(config, p)
        steps = (np.arange(grid, dtype=np.float64) + 0.5) / grid
        cy, cx = np.meshgrid(steps, steps, indexing="ij")
        centers = np.stack([cx.ravel(), cy.ravel()], axis=1)

        half = sizes / 2.0
        level = np.empty((grid * grid, len(sizes), 4), dtype=np.float64)
        level[:, :, 0] = centers[:, None, 0] - half[None, :, 0]
        level[:, :, 1] = centers[:, None, 1] - half[None, :, 1]
        level[:, :, 2] = centers[:, None, 0] + half[None, :, 0]
        level[:, :, 3] = centers[:, None, 1] + half[None, :, 1]
        levels.append(level)

    anchors = AnchorSet(config, levels)
    logger.debug("Built %d anchors over %d levels", len(anchors),
                 anchors.num_levels)
    return anchors


def cell_of(grid_size, point):
    """
    Row-major index of the grid cell holding a point. Points on a cell
    boundary belong to the lower index cell.
    :param grid_size: side of the square grid
    :param point: (x, y) in [0, 1]
    :return: cell index
    """
    x, y = point
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise ValidationError("Point %s is outside the unit square" %
                              (point,))
    col = min(max(math.ceil(x * grid_size) - 1, 0), grid_size - 1)
    row = min(max(math.ceil(y * grid_size) - 1, 0), grid_size - 1)
    return row * grid_size + col
