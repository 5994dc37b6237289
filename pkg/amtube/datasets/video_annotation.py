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
Ground truth annotations and their JSON file format::

    {"dataset": "...", "image_size": [w, h] or null,
     "videos": [{"id": "...", "n_frames": 120,
                 "tubes": [{"class": 1,
                            "keyframes": [[frame, [x1, y1, x2, y2]], ...]}]}]}

``image_size`` is null for normalized coordinates and the pixel resolution
otherwise.
"""
import json
import logging

from amtube.exceptions import ValidationError
from amtube.geometry.box import Box

logger = logging.getLogger(__name__)


class Tube:
    """
    One annotated action instance: a class label and keyframe boxes with
    strictly increasing frame numbers
    """

    def __init__(self, label, keyframes):
        self.label = int(label)
        self.keyframes = [(int(frame), box if isinstance(box, Box)
                           else Box(*box)) for frame, box in keyframes]
        frames = [frame for frame, _ in self.keyframes]
        if not frames:
            raise ValidationError("A tube needs at least one keyframe")
        if any(a >= b for a, b in zip(frames, frames[1:])):
            raise ValidationError(
                "Tube keyframes must be strictly increasing: %s" % frames)

    @property
    def frames(self):
        return [frame for frame, _ in self.keyframes]

    @property
    def t_start(self):
        return self.keyframes[0][0]

    @property
    def t_end(self):
        return self.keyframes[-1][0]

    def box_at(self, frame):
        for f, box in self.keyframes:
            if f == frame:
                return box
        return None

    def map_boxes(self, func):
        return Tube(self.label, [(f, func(b)) for f, b in self.keyframes])

    def to_dict(self):
        return {"class": self.label,
                "keyframes": [[f, b.to_list()] for f, b in self.keyframes]}

    @classmethod
    def from_dict(cls, values):
        try:
            return cls(values["class"],
                       [(f, b) for f, b in values["keyframes"]])
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError("Malformed tube: %s" % e)

    def __eq__(self, other):
        return isinstance(other, Tube) and self.label == other.label and \
            self.keyframes == other.keyframes


class VideoAnnotation:
    def __init__(self, video_id, n_frames, tubes):
        self.video_id = str(video_id)
        self.n_frames = int(n_frames)
        self.tubes = list(tubes)

    @property
    def labels(self):
        return sorted({tube.label for tube in self.tubes})

    def map_boxes(self, func):
        return VideoAnnotation(self.video_id, self.n_frames,
                               [tube.map_boxes(func) for tube in self.tubes])

    def to_dict(self):
        return {"id": self.video_id, "n_frames": self.n_frames,
                "tubes": [tube.to_dict() for tube in self.tubes]}

    @classmethod
    def from_dict(cls, values):
        try:
            return cls(values["id"], values["n_frames"],
                       [Tube.from_dict(t) for t in values["tubes"]])
        except KeyError as e:
            raise ValidationError("Video annotation is missing %s" % e)

    def __eq__(self, other):
        return isinstance(other, VideoAnnotation) and \
            self.to_dict() == other.to_dict()


class AnnotationSet:
    """
    The annotations of one dataset
    """

    def __init__(self, videos, dataset="synthetic", image_size=None):
        self.dataset = dataset
        self.image_size = list(image_size) if image_size else None
        self.videos = sorted(videos, key=lambda v: v.video_id)

    def __iter__(self):
        return iter(self.videos)

    def __len__(self):
        return len(self.videos)

    def video(self, video_id):
        for v in self.videos:
            if v.video_id == video_id:
                return v
        raise KeyError(video_id)

    @property
    def labels(self):
        return sorted({label for v in self.videos for label in v.labels})

    def to_pixels(self, image_w, image_h):
        """
        Scale normalized coordinates to a pixel resolution
        """
        if self.image_size is not None:
            raise ValidationError("Annotations are already in pixels")

        def scale(b):
            return Box(b[0] * image_w, b[1] * image_h,
                       b[2] * image_w, b[3] * image_h)

        return AnnotationSet([v.map_boxes(scale) for v in self.videos],
                             self.dataset, [image_w, image_h])

    def to_normalized(self):
        if self.image_size is None:
            return self
        image_w, image_h = self.image_size

        def scale(b):
            return Box(b[0] / image_w, b[1] / image_h,
                       b[2] / image_w, b[3] / image_h)

        return AnnotationSet([v.map_boxes(scale) for v in self.videos],
                             self.dataset, None)

    def to_dict(self):
        return {"dataset": self.dataset, "image_size": self.image_size,
                "videos": [v.to_dict() for v in self.videos]}

    @classmethod
    def from_dict(cls, values):
        if not isinstance(values, dict) or "videos" not in values:
            raise ValidationError("Annotation document needs a videos list")
        return cls([VideoAnnotation.from_dict(v) for v in values["videos"]],
                   values.get("dataset", "unknown"),
                   values.get("image_size"))

    def __eq__(self, other):
        return isinstance(other, AnnotationSet) and \
            self.to_dict() == other.to_dict()


def load_annotations(path):
    with open(path) as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as e:
            raise ValidationError("%s is not valid JSON: %s" % (path, e))
    annotations = AnnotationSet.from_dict(document)
    logger.info("Loaded %d videos from %s", len(annotations), path)
    return annotations


def save_annotations(annotations, path):
    with open(path, "w") as f:
        json.dump(annotations.to_dict(), f, sort_keys=True)
        f.write("\n")
