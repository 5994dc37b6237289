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

import numpy as np
import scipy.sparse

from amtube.exceptions import ValidationError

logger = logging.getLogger(__name__)

DEFAULT_TAU = 0.10


class TransitionMatrix:
    """
    Per level sparse row-stochastic matrices. Rows that were never observed
    stay all zero.
    """

    def __init__(self, grid_sizes, levels, config_hash=None, delta=None):
        self.grid_sizes = list(grid_sizes)
        self.levels = [scipy.sparse.csr_matrix(level, dtype=np.float64)
                       for level in levels]
        for level in self.levels:
            level.eliminate_zeros()
            level.sort_indices()
        self.config_hash = config_hash
        self.delta = delta

    @property
    def num_levels(self):
        return len(self.levels)

    def row_sums(self, level):
        return np.asarray(self.levels[level].sum(axis=1)).ravel()

    def entries(self, level):
        """
        :return: list of (i, j, probability) sorted by (i, j)
        """
        coo = self.levels[level].tocoo()
        order = np.lexsort((coo.col, coo.row))
        return [(int(coo.row[k]), int(coo.col[k]), float(coo.data[k]))
                for k in order]

    def offdiagonal_nonzero(self):
        counts = []
        for level in self.levels:
            coo = level.tocoo()
            counts.append(int(np.count_nonzero(coo.row != coo.col)))
        return counts


class BinaryTransitions:
    """
    Thresholded support of a transition matrix: per level, a frozen set of
    (i, j) cell pairs.
    """

    def __init__(self, grid_sizes, levels, tau=None, config_hash=None,
                 delta=None):
        self.grid_sizes = list(grid_sizes)
        self.levels = [frozenset((int(i), int(j)) for i, j in pairs)
                       for pairs in levels]
        if len(self.levels) != len(self.grid_sizes):
            raise ValidationError("One pair set is needed per grid level")
        for g, pairs in zip(self.grid_sizes, self.levels):
            cells = g * g
            if any(not (0 <= i < cells and 0 <= j < cells)
                   for i, j in pairs):
                raise ValidationError(
                    "Cell pair out of range for a %dx%d grid" % (g, g))
        self.tau = tau
        self.config_hash = config_hash
        self.delta = delta

    @classmethod
    def empty(cls, grid_sizes, **kwargs):
        return cls(grid_sizes, [[] for _ in grid_sizes], **kwargs)

    @property
    def num_levels(self):
        return len(self.levels)

    def sorted_pairs(self, level):
        return sorted(self.levels[level])

    def replace_levels(self, levels):
        return BinaryTransitions(self.grid_sizes, levels, tau=self.tau,
                                 config_hash=self.config_hash,
                                 delta=self.delta)

    def offdiagonal_count(self):
        return [sum(1 for i, j in pairs if i != j) for pairs in self.levels]

    def issubset(self, other):
        return all(a <= b for a, b in zip(self.levels, other.levels))

    def __eq__(self, other):
        if not isinstance(other, BinaryTransitions):
            return NotImplemented
        return (self.grid_sizes == other.grid_sizes and
                self.levels == other.levels)

    def __repr__(self):
        return "BinaryTransitions(grid_sizes=%s, cardinality=%s)" % (
            self.grid_sizes, [len(pairs) for pairs in self.levels])


def normalize(counts):
    """
    Divide every entry by its row sum. All-zero rows stay all zero.
    :param counts: TransitionCounts
    :return: TransitionMatrix
    """
    levels = []
    for level in counts.levels:
        level = scipy.sparse.csr_matrix(level, dtype=np.float64)
        sums = np.asarray(level.sum(axis=1)).ravel()
        scale = np.zeros_like(sums)
        np.divide(1.0, sums, out=scale, where=sums > 0)
        levels.append(scipy.sparse.diags(scale).dot(level).tocsr())
    return TransitionMatrix(counts.grid_sizes, levels,
                            config_hash=counts.config_hash,
                            delta=counts.delta)


def threshold(matrix, tau=DEFAULT_TAU):
    """
    Keep the cell pairs whose transition probability is at least tau
    :param matrix: TransitionMatrix
    :param tau: probability in (0, 1]
    :return: BinaryTransitions
    """
    if not (0.0 < tau <= 1.0):
        raise ValidationError("Threshold tau must be in (0, 1], got %s" % tau)

    levels = []
    for level in matrix.levels:
        coo = level.tocoo()
        keep = coo.data >= tau
        levels.append(zip(coo.row[keep].tolist(), coo.col[keep].tolist()))
    binary = BinaryTransitions(matrix.grid_sizes, levels, tau=tau,
                               config_hash=matrix.config_hash,
                               delta=matrix.delta)
    logger.info("Thresholded at tau=%.3f: cardinalities %s", tau,
                [len(pairs) for pairs in binary.levels])
    return binary


def cardinality(binary):
    """
    :return: (per level cardinalities, total M)
    """
    per_level = [len(pairs) for pairs in binary.levels]
    return per_level, sum(per_level)


def hypothesis_space(binary, anchors):
    """
    Number of anchor micro-tube hypotheses kept by the binary transitions
    against the dense count over every pair of cells
    :return: (kept, dense)
    """
    kept = sum(len(pairs) * anchors.shapes_per_cell(p)
               for p, pairs in enumerate(binary.levels))
    dense = sum(anchors.num_cells(p) ** 2 * anchors.shapes_per_cell(p)
                for p in range(anchors.num_levels))
    return kept, dense
