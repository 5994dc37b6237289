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
import unittest

import numpy as np

from amtube.anchors.anchor_set import build_pyramid
from amtube.anchors.pyramid_config import PyramidConfig
from amtube.exceptions import ValidationError
from amtube.geometry.box import Box, MicroTube
from amtube.proposals.anchor_microtube import (AnchorMicroTube,
                                               enumerate_proposals)
from amtube.proposals.matching import (best_overlaps, match_positives,
                                       proposal_recall)
from amtube.transitions.augmentation import augment_neighbors
from amtube.transitions.tests.test_transition_counts import \
    random_microtubes
from amtube.transitions.transition_matrix import BinaryTransitions


def proposal(start, end):
    return AnchorMicroTube(0, 0, 0, 0, Box(*start), Box(*end))


class TestMatchPositives(unittest.TestCase):
    def test_exact_copy(self):
        gt = MicroTube(0, 1, [0.1, 0.1, 0.3, 0.3], [0.2, 0.1, 0.4, 0.3])
        proposals = [proposal([0.6, 0.6, 0.9, 0.9], [0.6, 0.6, 0.9, 0.9]),
                     proposal(gt.box_start, gt.box_end)]
        self.assertEqual(match_positives([gt], proposals, 0.5),
                         {1: (0, 1.0)})

    def test_forced_best(self):
        gt = MicroTube(0, 1, [0.0, 0.0, 0.2, 0.2], [0.0, 0.0, 0.2, 0.2])
        # start IoU 0.6, end IoU 0
        far = [0.8, 0.8, 1.0, 1.0]
        weak = proposal([0.0, 0.0, 0.2, 0.12], far)
        result = match_positives([gt], [weak], 0.5)
        self.assertEqual(list(result), [0])
        self.assertAlmostEqual(result[0][1], 0.3)

    def test_disjoint_ground_truths(self):
        a = MicroTube(0, 1, [0.0, 0.0, 0.2, 0.2], [0.0, 0.0, 0.2, 0.2])
        b = MicroTube(0, 1, [0.7, 0.7, 0.9, 0.9], [0.7, 0.7, 0.9, 0.9])
        proposals = [proposal(b.box_start, b.box_end),
                     proposal(a.box_start, a.box_end)]
        self.assertEqual(match_positives([a, b], proposals, 0.5),
                         {0: (1, 1.0), 1: (0, 1.0)})

    def test_tie_goes_to_lower_index(self):
        gt = MicroTube(0, 1, [0.0, 0.0, 0.2, 0.2], [0.0, 0.0, 0.2, 0.2])
        proposals = [proposal(gt.box_start, gt.box_end)]
        self.assertEqual(match_positives([gt, gt], proposals, 0.5),
                         {0: (0, 1.0)})

    def test_forced_proposal_stays_with_its_ground_truth(self):
        # b overlaps p0 more than a does, but below iou_min, and p0 is not
        # b's best proposal; p0 is a's best
        p0 = proposal([0.2, 0.0, 0.4, 1.0], [0.2, 0.0, 0.4, 1.0])
        p1 = proposal([0.0, 0.0, 0.4, 1.0], [0.0, 0.0, 0.4, 1.0])
        a = MicroTube(0, 1, [0.3, 0.0, 0.6, 1.0], [0.3, 0.0, 0.6, 1.0])
        b = MicroTube(0, 1, [0.0, 0.0, 0.4, 1.0], [0.0, 0.0, 0.4, 1.0])
        result = match_positives([a, b], [p0, p1], 0.6)
        self.assertEqual(sorted(result), [0, 1])
        self.assertEqual(result[0][0], 0)
        self.assertAlmostEqual(result[0][1], 0.25)
        self.assertEqual(result[1][0], 1)
        self.assertAlmostEqual(result[1][1], 1.0)

    def test_no_overlap_no_match(self):
        gt = MicroTube(0, 1, [0.0, 0.0, 0.2, 0.2], [0.0, 0.0, 0.2, 0.2])
        far = proposal([0.8, 0.8, 1.0, 1.0], [0.8, 0.8, 1.0, 1.0])
        self.assertEqual(match_positives([gt], [far], 0.5), {})

    def test_threshold_range(self):
        with self.assertRaises(ValidationError):
            match_positives([], [], 1.0)


class TestProposalRecall(unittest.TestCase):
    def test_exact_copies(self):
        gts = random_microtubes(np.random.default_rng(0), 10)
        proposals = [proposal(g.box_start, g.box_end) for g in gts]
        for threshold in (0.1, 0.5, 0.99):
            self.assertEqual(proposal_recall(gts, proposals, threshold), 1.0)

    def test_empty_proposals(self):
        gts = random_microtubes(np.random.default_rng(0), 3)
        self.assertEqual(proposal_recall(gts, [], 0.5), 0.0)
        self.assertEqual(proposal_recall([], [], 0.5), 0.0)

    def test_more_pairs_never_lower(self):
        anchors = build_pyramid(PyramidConfig())
        grids = anchors.config.grid_sizes
        gts = random_microtubes(np.random.default_rng(9), 30)
        sparse = BinaryTransitions(grids, [[(i, i) for i in range(g * g)]
                                           for g in grids])
        dense = augment_neighbors(sparse)
        sparse = enumerate_proposals(sparse, anchors)
        dense = enumerate_proposals(dense, anchors)
        small = best_overlaps(gts, sparse)
        large = best_overlaps(gts, dense)
        self.assertTrue(np.all(large >= small - 1e-12))
        for threshold in (0.3, 0.5, 0.7):
            self.assertGreaterEqual(proposal_recall(gts, dense, threshold),
                                    proposal_recall(gts, sparse, threshold))


if __name__ == '__main__':
    unittest.main()
