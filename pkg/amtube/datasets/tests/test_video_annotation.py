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
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from amtube.datasets.video_annotation import (AnnotationSet, Tube,
                                              VideoAnnotation,
                                              load_annotations,
                                              save_annotations)
from amtube.exceptions import ValidationError
from amtube.geometry.box import Box

DOCUMENT = {
    "dataset": "toy",
    "image_size": None,
    "videos": [
        {"id": "v2", "n_frames": 50,
         "tubes": [{"class": 2,
                    "keyframes": [[3, [0.1, 0.1, 0.3, 0.4]]]}]},
        {"id": "v1", "n_frames": 120,
         "tubes": [{"class": 1,
                    "keyframes": [[1, [0.0, 0.0, 0.5, 0.5]],
                                  [60, [0.1, 0.0, 0.6, 0.5]],
                                  [119, [0.2, 0.0, 0.7, 0.5]]]}]},
    ]
}


class TestTube(unittest.TestCase):
    def test_frames(self):
        tube = Tube(1, [(1, [0, 0, 1, 1]), (5, [0, 0, 1, 1])])
        self.assertEqual(tube.frames, [1, 5])
        self.assertEqual((tube.t_start, tube.t_end), (1, 5))
        self.assertEqual(tube.box_at(5), Box(0, 0, 1, 1))
        self.assertIsNone(tube.box_at(3))

    def test_frames_must_increase(self):
        with self.assertRaises(ValidationError):
            Tube(1, [(5, [0, 0, 1, 1]), (5, [0, 0, 1, 1])])
        with self.assertRaises(ValidationError):
            Tube(1, [(5, [0, 0, 1, 1]), (2, [0, 0, 1, 1])])

    def test_needs_a_keyframe(self):
        with self.assertRaises(ValidationError):
            Tube(1, [])

    def test_malformed(self):
        with self.assertRaises(ValidationError):
            Tube.from_dict({"class": 1})
        with self.assertRaises(ValidationError):
            Tube.from_dict({"class": 1, "keyframes": [[0, [1, 1, 0, 0]]]})


class TestAnnotationSet(unittest.TestCase):
    def test_from_dict_sorts_videos(self):
        annotations = AnnotationSet.from_dict(DOCUMENT)
        self.assertEqual([v.video_id for v in annotations], ["v1", "v2"])
        self.assertEqual(annotations.labels, [1, 2])
        self.assertEqual(annotations.video("v2").n_frames, 50)
        with self.assertRaises(KeyError):
            annotations.video("v3")

    def test_missing_videos(self):
        with self.assertRaises(ValidationError):
            AnnotationSet.from_dict({"dataset": "toy"})
        with self.assertRaises(ValidationError):
            AnnotationSet.from_dict({"videos": [{"id": "a"}]})

    def test_pixels_and_back(self):
        annotations = AnnotationSet.from_dict(DOCUMENT)
        pixels = annotations.to_pixels(320, 240)
        self.assertEqual(pixels.image_size, [320, 240])
        self.assertEqual(pixels.video("v1").tubes[0].box_at(1),
                         Box(0, 0, 160, 120))
        restored = pixels.to_normalized()
        self.assertIsNone(restored.image_size)
        for a, b in zip(restored.video("v1").tubes[0].keyframes,
                        annotations.video("v1").tubes[0].keyframes):
            self.assertEqual(a[0], b[0])
            for x, y in zip(a[1], b[1]):
                self.assertAlmostEqual(x, y)

    def test_to_pixels_twice(self):
        pixels = AnnotationSet.from_dict(DOCUMENT).to_pixels(320, 240)
        with self.assertRaises(ValidationError):
            pixels.to_pixels(320, 240)

    def test_normalized_is_noop(self):
        annotations = AnnotationSet.from_dict(DOCUMENT)
        self.assertIs(annotations.to_normalized(), annotations)

    def test_video_labels(self):
        video = VideoAnnotation("a", 10, [Tube(3, [(0, [0, 0, 1, 1])]),
                                          Tube(1, [(0, [0, 0, 1, 1])])])
        self.assertEqual(video.labels, [1, 3])


class TestAnnotationFiles(unittest.TestCase):
    def test_load(self):
        with patch("builtins.open", unittest.mock.mock_open(
                read_data=json.dumps(DOCUMENT))) as mock_file:
            annotations = load_annotations("/foo/gt.json")
            mock_file.assert_called_with("/foo/gt.json")
        self.assertEqual(len(annotations), 2)
        self.assertEqual(annotations.dataset, "toy")

    def test_load_invalid_json(self):
        with patch("builtins.open",
                   unittest.mock.mock_open(read_data="{not json")):
            with self.assertRaises(ValidationError):
                load_annotations("/foo/gt.json")

    def test_save_and_load(self):
        annotations = AnnotationSet.from_dict(DOCUMENT)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "gt.json")
            save_annotations(annotations, path)
            self.assertEqual(load_annotations(path), annotations)
            with open(path) as f:
                first = f.read()
            save_annotations(load_annotations(path), path)
            with open(path) as f:
                self.assertEqual(f.read(), first)


if __name__ == '__main__':
    unittest.main()
