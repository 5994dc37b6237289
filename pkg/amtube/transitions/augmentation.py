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
"""
Test time densification of binary transitions. Every augmentation returns
a superset of its input and is idempotent.
"""
import logging

logger = logging.getLogger(__name__)

NEIGHBOUR_OFFSETS = [(dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1)
                     if (dr, dc) != (0, 0)]


def _translated_pairs(grid, offsets):
    """
    All (cell, cell + offset) pairs that stay inside a grid x grid lattice
    :param offsets: iterable of (row delta, column delta)
    """
    pairs = set()
    for dr, dc in offsets:
        for row in range(max(0, -dr), min(grid, grid - dr)):
            for col in range(max(0, -dc), min(grid, grid - dc)):
                pairs.add((row * grid + col,
                           (row + dr) * grid + (col + dc)))
    return pairs


def augment_diagonal(binary):
    """
    Add every (i, i) pair
    """
    levels = [pairs | {(i, i) for i in range(g * g)}
              for g, pairs in zip(binary.grid_sizes, binary.levels)]
    return binary.replace_levels(levels)


def augment_neighbors(binary):
    """
    Add transitions from every cell to each of its in-bounds 8-connected
    neighbours
    """
    levels = [pairs | _translated_pairs(g, NEIGHBOUR_OFFSETS)
              for g, pairs in zip(binary.grid_sizes, binary.levels)]
    return binary.replace_levels(levels)


def relative_offsets(grid, pairs):
    """
    Set of (row delta, column delta) displacements present in a pair set
    """
    offsets = set()
    for i, j in pairs:
        ri, ci = divmod(i, grid)
        rj, cj = divmod(j, grid)
        offsets.add((rj - ri, cj - ci))
    return offsets


def augment_relative_offsets(binary):
    """
    Apply every displacement seen at a level to every cell of that level.
    Placements that leave the grid are dropped.
    """
    levels = []
    for g, pairs in zip(binary.grid_sizes, binary.levels):
        offsets = relative_offsets(g, pairs)
        levels.append(pairs | _translated_pairs(g, offsets))
    augmented = binary.replace_levels(levels)
    logger.debug("Relative offset augmentation: %s -> %s",
                 [len(p) for p in binary.levels],
                 [len(p) for p in augmented.levels])
    return augmented


AUGMENTATIONS = {
    "diagonal": augment_diagonal,
    "neighbors": augment_neighbors,
    "offsets": augment_relative_offsets,
}
