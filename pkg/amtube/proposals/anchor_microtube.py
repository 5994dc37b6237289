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
from collections import namedtuple

import numpy as np

from amtube.exceptions import ConfigHashMismatch, ValidationError
from amtube.geometry.box import Box, MicroTube

logger = logging.getLogger(__name__)


class AnchorMicroTube(namedtuple("AnchorMicroTube",
                                 ["level", "cell_i", "cell_j", "shape",
                                  "box_start", "box_end"])):
    """
    Shape ``shape`` of cell ``cell_i`` in the first frame linked to the same
    shape of cell ``cell_j`` in the second frame, at one pyramid level
    """
    __slots__ = ()

    def as_microtube(self, frame_start=0, delta=1):
        return MicroTube(frame_start, delta, self.box_start, self.box_end)

    def is_cuboid(self):
        return self.cell_i == self.cell_j

    def to_dict(self):
        return {"level": self.level, "cell_i": self.cell_i,
                "cell_j": self.cell_j, "shape": self.shape,
                "box_start": self.box_start.to_list(),
                "box_end": self.box_end.to_list()}

    @classmethod
    def from_dict(cls, values):
        return cls(int(values["level"]), int(values["cell_i"]),
                   int(values["cell_j"]), int(values["shape"]),
                   Box(*values["box_start"]), Box(*values["box_end"]))


def check_compatible(binary, anchors):
    """
    Raise unless the binary transitions were built over these anchors
    """
    if binary.config_hash is not None and \
            binary.config_hash != anchors.config_hash:
        raise ConfigHashMismatch(anchors.config_hash, binary.config_hash)
    if list(binary.grid_sizes) != list(anchors.config.grid_sizes):
        raise ValidationError(
            "Transitions over grids %s do not fit anchors over grids %s" %
            (binary.grid_sizes, anchors.config.grid_sizes))


def enumerate_proposals(binary, anchors):
    """
    Every anchor micro-tube allowed by a set of binary transitions, ordered
    by (level, cell_i, cell_j, shape)
    :param binary: BinaryTransitions
    :param anchors: AnchorSet built from the same PyramidConfig
    :return: list of AnchorMicroTube
    """
    check_compatible(binary, anchors)
    proposals = []
    for p in range(anchors.num_levels):
        level = anchors.levels[p]
        for i, j in binary.sorted_pairs(p):
            for r in range(level.shape[1]):
                proposals.append(AnchorMicroTube(
                    p, i, j, r, Box(*level[i, r]), Box(*level[j, r])))
    logger.info("Enumerated %d anchor micro-tubes from %d cell pairs",
                len(proposals), sum(len(pairs) for pairs in binary.levels))
    return proposals


def proposal_pairs(proposals):
    """
    :return: (M, 2, 4) array of the start and end boxes of every proposal
    """
    if not proposals:
        return np.zeros((0, 2, 4), dtype=np.float64)
    return np.array([[p.box_start, p.box_end] for p in proposals],
                    dtype=np.float64)
