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

from amtube.exceptions import ValidationError
from amtube.geometry.box import Box, MicroTube
from amtube.linking.fusion import fuse_streams
from amtube.linking.scored_microtube import ScoredMicroTube


def stream(name, scores, offset=0.0, frame_start=0, index=0):
    box = Box(0.1 + offset, 0.1, 0.3 + offset, 0.3)
    return [ScoredMicroTube("v", MicroTube(frame_start, 2, box, box), scores,
                            stream=name, index=index)]


class TestFuseStreams(unittest.TestCase):
    def test_identical(self):
        a = stream("rgb", [0.2, 0.8])
        fused = fuse_streams(a, stream("flow", [0.2, 0.8]))
        np.testing.assert_allclose(fused[0].scores, a[0].scores)
        np.testing.assert_allclose(fused[0].microtube.as_array(),
                                   a[0].microtube.as_array())
        self.assertEqual(fused[0].stream, "fused")
        self.assertEqual(fused[0].index, 0)

    def test_scores_halved(self):
        fused = fuse_streams(stream("rgb", [0.4, 0.6]),
                             stream("flow", [0.0, 0.0]))
        np.testing.assert_allclose(fused[0].scores, [0.2, 0.3])

    def test_coordinate_midpoint(self):
        eps = 0.01
        fused = fuse_streams(stream("rgb", [0.5, 0.5]),
                             stream("flow", [0.5, 0.5], offset=2 * eps))
        self.assertAlmostEqual(fused[0].box_start.x_min, 0.1 + eps)
        self.assertAlmostEqual(fused[0].box_end.x_max, 0.3 + eps)

    def test_length_mismatch(self):
        with self.assertRaises(ValidationError):
            fuse_streams(stream("rgb", [0.5, 0.5]), [])

    def test_slot_mismatch(self):
        with self.assertRaises(ValidationError):
            fuse_streams(stream("rgb", [0.5, 0.5]),
                         stream("flow", [0.5, 0.5], frame_start=2))
        with self.assertRaises(ValidationError):
            fuse_streams(stream("rgb", [0.5, 0.5]),
                         stream("flow", [0.5, 0.5], index=3))


if __name__ == '__main__':
    unittest.main()
