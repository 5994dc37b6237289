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
import itertools
import unittest

import numpy as np

from amtube.exceptions import ValidationError
from amtube.linking.action_path import ActionPath
from amtube.linking.trimming import (segments, trim, trim_path,
                                     viterbi_labels)

ALPHAS = [0.0, 0.25, 0.5, 1.0, 2.0]


def all_labellings(n):
    return np.array(list(itertools.product((0, 1), repeat=n)),
                    dtype=np.int64)


def objective(labellings, scores, alpha):
    labellings = np.atleast_2d(labellings)
    gains = np.where(labellings == 1, scores, 1.0 - scores).sum(axis=1)
    switches = np.abs(np.diff(labellings, axis=1)).sum(axis=1)
    return gains - alpha * switches


def brute_force(scores, alpha):
    """
    Best labelling by exhaustive search; ties go to the labelling that is
    smallest when read from the last frame backwards
    """
    labellings = all_labellings(len(scores))
    values = objective(labellings, scores, alpha)
    best = values.max()
    winners = [tuple(row[::-1]) for row in labellings[values == best]]
    return np.array(min(winners)[::-1]), values


class TestTrim(unittest.TestCase):
    def test_confident_everywhere(self):
        for alpha in ALPHAS:
            self.assertEqual(trim([0.9] * 7, alpha), [[0, 6]])

    def test_no_switching_cost_thresholds(self):
        scores = [0.2, 0.7, 0.8, 0.4, 0.6, 0.5]
        self.assertEqual(trim(scores, 0.0), [[1, 2], [4, 4]])

    def test_high_cost_bridges_gap(self):
        scores = [0.9, 0.9, 0.3, 0.9, 0.9]
        self.assertEqual(trim(scores, 0.0), [[0, 1], [3, 4]])
        self.assertEqual(trim(scores, 1.0), [[0, 4]])

    def test_empty(self):
        with self.assertRaises(ValidationError):
            trim([], 0.5)

    def test_negative_alpha(self):
        with self.assertRaises(ValidationError):
            trim([0.5], -1.0)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(2019)
        for _ in range(1000):
            n = int(rng.integers(1, 13))
            scores = rng.uniform(0.0, 1.0, size=n)
            alpha = ALPHAS[int(rng.integers(len(ALPHAS)))]
            labels = viterbi_labels(scores, alpha)
            expected, values = brute_force(scores, alpha)
            got = objective(labels, scores, alpha)[0]
            self.assertAlmostEqual(got, values.max(), places=9)
            runner_up = np.sort(values)[-2] if len(values) > 1 else -np.inf
            if values.max() - runner_up > 1e-9:
                np.testing.assert_array_equal(labels, expected)

    def test_ties_match_brute_force(self):
        # quarter steps keep every sum exact so ties are real ties
        rng = np.random.default_rng(7)
        for _ in range(300):
            n = int(rng.integers(1, 9))
            scores = rng.integers(0, 5, size=n) / 4.0
            alpha = ALPHAS[int(rng.integers(len(ALPHAS)))]
            expected, _ = brute_force(scores, alpha)
            np.testing.assert_array_equal(viterbi_labels(scores, alpha),
                                          expected)

    def test_tie_prefers_background(self):
        self.assertEqual(trim([0.5, 0.5], 0.0), [])

    def test_segment_count_non_increasing_in_alpha(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            scores = rng.uniform(size=int(rng.integers(1, 40)))
            counts = [len(trim(scores, alpha))
                      for alpha in (0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0)]
            self.assertEqual(counts, sorted(counts, reverse=True))

    def test_segments(self):
        self.assertEqual(segments([1, 1, 0, 1]), [[0, 1], [3, 3]])
        self.assertEqual(segments([0, 0]), [])


class TestTrimPath(unittest.TestCase):
    def test_split(self):
        path = ActionPath("v", 2, np.arange(10, 15), np.tile([0, 0, 1, 1],
                                                              (5, 1)),
                          frame_scores=[0.9, 0.8, 0.1, 0.7, 0.9])
        pieces = trim_path(path, 0.0)
        self.assertEqual([(p.t_start, p.t_end) for p in pieces],
                         [(10, 11), (13, 14)])
        self.assertAlmostEqual(pieces[0].score, 0.85)
        self.assertEqual(pieces[1].label, 2)

    def test_needs_frame_scores(self):
        path = ActionPath("v", 1, [0, 1], [[0, 0, 1, 1], [0, 0, 1, 1]])
        with self.assertRaises(ValidationError):
            trim_path(path, 0.5)


if __name__ == '__main__':
    unittest.main()
