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
Transition counts between anchor cells of the same pyramid level.

Every ground truth micro-tube is matched to the anchor cell pair of maximal
overlap at each level; the level with the best pair receives one count.
"""
import logging
from collections import Counter

import numpy as np
import scipy.sparse

from amtube.exceptions import EmptyGroundTruthError, ValidationError
from amtube.geometry.box import iou_matrix

logger = logging.getLogger(__name__)

# ground truth micro-tubes scored against the anchors per batch
BATCH_SIZE = 64


class TransitionCounts:
    """
    Per level sparse integer matrices of shape (cells_p, cells_p).
    ``levels[p][i, j]`` counts ground truth micro-tubes whose best anchor
    pair was (cell i, cell j) at level p.
    """

    def __init__(self, grid_sizes, levels=None, config_hash=None,
                 delta=None):
        self.grid_sizes = list(grid_sizes)
        if levels is None:
            levels = [scipy.sparse.csr_matrix((g * g, g * g), dtype=np.int64)
                      for g in self.grid_sizes]
        self.levels = [scipy.sparse.csr_matrix(level, dtype=np.int64)
                       for level in levels]
        for level in self.levels:
            level.sum_duplicates()
            level.eliminate_zeros()
            level.sort_indices()
        self.config_hash = config_hash
        self.delta = delta

    @classmethod
    def empty_like(cls, anchors, delta=None):
        return cls(anchors.config.grid_sizes, config_hash=anchors.config_hash,
                   delta=delta)

    @classmethod
    def from_entries(cls, grid_sizes, entries, config_hash=None, delta=None):
        """
        :param entries: iterable of (level, i, j, count)
        """
        per_level = [([], [], []) for _ in grid_sizes]
        for p, i, j, count in entries:
            rows, cols, data = per_level[p]
            rows.append(i)
            cols.append(j)
            data.append(count)
        levels = []
        for g, (rows, cols, data) in zip(grid_sizes, per_level):
            levels.append(scipy.sparse.coo_matrix(
                (np.asarray(data, dtype=np.int64),
                 (np.asarray(rows, dtype=np.int64),
                  np.asarray(cols, dtype=np.int64))),
                shape=(g * g, g * g)).tocsr())
        return cls(grid_sizes, levels, config_hash=config_hash, delta=delta)

    @property
    def num_levels(self):
        return len(self.levels)

    def total(self):
        return int(sum(level.sum() for level in self.levels))

    def level_totals(self):
        return [int(level.sum()) for level in self.levels]

    def entries(self, level):
        """
        Non-zero entries of one level sorted by (i, j)
        :return: list of (i, j, count)
        """
        coo = self.levels[level].tocoo()
        order = np.lexsort((coo.col, coo.row))
        return [(int(coo.row[k]), int(coo.col[k]), int(coo.data[k]))
                for k in order]

    def offdiagonal_nonzero(self):
        """
        Number of non-zero off-diagonal entries per level
        """
        counts = []
        for level in self.levels:
            coo = level.tocoo()
            counts.append(int(np.count_nonzero(coo.row != coo.col)))
        return counts

    def merge(self, other):
        """
        Elementwise sum with another set of counts over the same geometry
        """
        if other.grid_sizes != self.grid_sizes:
            raise ValidationError("Cannot merge counts over different grids")
        delta = self.delta if self.delta == other.delta else None
        return TransitionCounts(
            self.grid_sizes,
            [a + b for a, b in zip(self.levels, other.levels)],
            config_hash=self.config_hash or other.config_hash,
            delta=delta)

    def __add__(self, other):
        return self.merge(other)

    def __eq__(self, other):
        if not isinstance(other, TransitionCounts):
            return NotImplemented
        if self.grid_sizes != other.grid_sizes:
            return False
        return all((a != b).nnz == 0
                   for a, b in zip(self.levels, other.levels))

    def __repr__(self):
        return "TransitionCounts(grid_sizes=%s, total=%d)" % (
            self.grid_sizes, self.total())


def _best_cells(boxes, anchors, level):
    """
    For each box, the cell holding the anchor of maximal IoU at one level.
    argmax returns the first maximum, so ties go to the lowest cell index
    and, inside a cell, to the lowest shape index.
    :return: (cells, ious) arrays of length len(boxes)
    """
    level_anchors = anchors.levels[level]
    num_cells, num_shapes = level_anchors.shape[:2]
    ious = iou_matrix(boxes, level_anchors.reshape(-1, 4))
    per_cell = ious.reshape(len(boxes), num_cells, num_shapes).max(axis=2)
    cells = per_cell.argmax(axis=1)
    return cells, per_cell[np.arange(len(boxes)), cells]


def best_anchor_pair(microtube, anchors, level):
    """
    Anchor cell pair of maximal overlap with a micro-tube at one level
    :return: (i, j, score) where score is the mean of the two best IoUs
    """
    boxes = microtube.as_array()
    cells, ious = _best_cells(boxes, anchors, level)
    return int(cells[0]), int(cells[1]), float((ious[0] + ious[1]) / 2.0)


def best_level_pairs(microtubes, anchors):
    """
    Best level and cell pair for a batch of micro-tubes. Level ties go to
    the lowest level index, the finest grid.
    :return: (levels, cell_i, cell_j, scores) arrays
    """
    pairs = np.array([m.as_array() for m in microtubes],
                     dtype=np.float64).reshape(-1, 2, 4)
    n = len(pairs)
    starts = np.empty((anchors.num_levels, n), dtype=np.int64)
    ends = np.empty((anchors.num_levels, n), dtype=np.int64)
    scores = np.empty((anchors.num_levels, n), dtype=np.float64)
    for p in range(anchors.num_levels):
        cells_i, ious_i = _best_cells(pairs[:, 0], anchors, p)
        cells_j, ious_j = _best_cells(pairs[:, 1], anchors, p)
        starts[p] = cells_i
        ends[p] = cells_j
        scores[p] = (ious_i + ious_j) / 2.0

    best = scores.argmax(axis=0)
    columns = np.arange(n)
    return (best, starts[best, columns], ends[best, columns],
            scores[best, columns])


def estimate(microtubes, anchors, delta=None):
    """
    Count best anchor cell transitions over ground truth micro-tubes
    :param microtubes: collection of MicroTube
    :param anchors: AnchorSet
    :param delta: frame gap recorded in the result. Inferred from the
        micro-tubes when they all share one.
    :return: TransitionCounts
    """
    microtubes = list(microtubes)
    if not microtubes:
        raise EmptyGroundTruthError(
            "Cannot estimate transitions from an empty ground truth set")

    if delta is None:
        deltas = {m.delta for m in microtubes}
        delta = deltas.pop() if len(deltas) == 1 else None

    counter = Counter()
    for start in range(0, len(microtubes), BATCH_SIZE):
        batch = microtubes[start:start + BATCH_SIZE]
        levels, cells_i, cells_j, _ = best_level_pairs(batch, anchors)
        counter.update(zip(levels.tolist(), cells_i.tolist(),
                           cells_j.tolist()))

    counts = TransitionCounts.from_entries(
        anchors.config.grid_sizes,
        ((p, i, j, n) for (p, i, j), n in counter.items()),
        config_hash=anchors.config_hash, delta=delta)
    logger.info("Estimated transitions from %d micro-tubes, per level %s",
                len(microtubes), counts.level_totals())
    return counts


def offdiagonal_by_class(labelled_microtubes, anchors):
    """
    How many micro-tubes of each class land on an off-diagonal transition.
    Classes with a non-zero count move across cells at this delta.
    :param labelled_microtubes: iterable of (label, MicroTube)
    :return: dict label -> (offdiagonal count, total count)
    """
    labelled_microtubes = list(labelled_microtubes)
    result = {}
    if not labelled_microtubes:
        return result
    for start in range(0, len(labelled_microtubes), BATCH_SIZE):
        batch = labelled_microtubes[start:start + BATCH_SIZE]
        _, cells_i, cells_j, _ = best_level_pairs([m for _, m in batch],
                                                  anchors)
        for (label, _), i, j in zip(batch, cells_i.tolist(),
                                    cells_j.tolist()):
            moved, total = result.get(label, (0, 0))
            result[label] = (moved + (1 if i != j else 0), total + 1)
    return result
