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
Box and micro-tube arithmetic.

Boxes are ``[x_min, y_min, x_max, y_max]``. All functions are unit agnostic;
they work the same on normalized coordinates and on pixels.
"""
import math
from collections import namedtuple

import numpy as np

from amtube.exceptions import ValidationError


class Box(namedtuple("Box", ["x_min", "y_min", "x_max", "y_max"])):
    __slots__ = ()

    def __new__(cls, x_min, y_min, x_max, y_max):
        coords = [float(v) for v in (x_min, y_min, x_max, y_max)]
        if not all(math.isfinite(v) for v in coords):
            raise ValidationError("Box coordinates must be finite: %s" %
                                  coords)
        if coords[0] > coords[2] or coords[1] > coords[3]:
            raise ValidationError("Box corners are inverted: %s" % coords)
        return super().__new__(cls, *coords)

    @property
    def width(self):
        return self.x_max - self.x_min

    @property
    def height(self):
        return self.y_max - self.y_min

    @property
    def area(self):
        return self.width * self.height

    @property
    def center(self):
        return ((self.x_min + self.x_max) / 2.0,
                (self.y_min + self.y_max) / 2.0)

    def to_list(self):
        return [self.x_min, self.y_min, self.x_max, self.y_max]


class MicroTube(namedtuple("MicroTube",
                           ["frame_start", "delta", "box_start", "box_end"])):
    """
    A pair of boxes ``delta`` frames apart. The box at ``frame_start`` is
    ``box_start``; the box at ``frame_start + delta`` is ``box_end``.
    """
    __slots__ = ()

    def __new__(cls, frame_start, delta, box_start, box_end):
        if int(delta) < 1:
            raise ValidationError(
                "Micro-tube delta must be at least 1, got %s" % delta)
        if not isinstance(box_start, Box):
            box_start = Box(*box_start)
        if not isinstance(box_end, Box):
            box_end = Box(*box_end)
        return super().__new__(cls, int(frame_start), int(delta),
                               box_start, box_end)

    @property
    def frame_end(self):
        return self.frame_start + self.delta

    def as_array(self):
        """
        :return: (2, 4) array with the start and end boxes
        """
        return np.array([self.box_start, self.box_end], dtype=np.float64)


def iou(a, b):
    """
    Intersection over union of two boxes. Zero when the union has no area.
    """
    inter_w = min(a[2], b[2]) - max(a[0], b[0])
    inter_h = min(a[3], b[3]) - max(a[1], b[1])
    if inter_w <= 0 or inter_h <= 0:
        return 0.0
    inter = inter_w * inter_h
    union = ((a[2] - a[0]) * (a[3] - a[1]) +
             (b[2] - b[0]) * (b[3] - b[1]) - inter)
    if union <= 0:
        return 0.0
    return float(inter / union)


def iou_many(box, boxes):
    """
    IoU of one box against an (N, 4) array of boxes
    :return: (N,) array
    """
    boxes = np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
    inter_w = np.minimum(box[2], boxes[:, 2]) - np.maximum(box[0], boxes[:, 0])
    inter_h = np.minimum(box[3], boxes[:, 3]) - np.maximum(box[1], boxes[:, 1])
    inter = np.clip(inter_w, 0, None) * np.clip(inter_h, 0, None)
    area_a = (box[2] - box[0]) * (box[3] - box[1])
    area_b = (boxes[:, 2] - boxes[:, 0]) * (boxes[:, 3] - boxes[:, 1])
    union = area_a + area_b - inter
    out = np.zeros(len(boxes), dtype=np.float64)
    np.divide(inter, union, out=out, where=union > 0)
    return out


def iou_matrix(boxes_a, boxes_b):
    """
    Pairwise IoU between (N, 4) and (M, 4) arrays
    :return: (N, M) array
    """
    a = np.asarray(boxes_a, dtype=np.float64).reshape(-1, 4)
    b = np.asarray(boxes_b, dtype=np.float64).reshape(-1, 4)
    inter_w = (np.minimum(a[:, None, 2], b[None, :, 2]) -
               np.maximum(a[:, None, 0], b[None, :, 0]))
    inter_h = (np.minimum(a[:, None, 3], b[None, :, 3]) -
               np.maximum(a[:, None, 1], b[None, :, 1]))
    inter = np.clip(inter_w, 0, None) * np.clip(inter_h, 0, None)
    area_a = (a[:, 2] - a[:, 0]) * (a[:, 3] - a[:, 1])
    area_b = (b[:, 2] - b[:, 0]) * (b[:, 3] - b[:, 1])
    union = area_a[:, None] + area_b[None, :] - inter
    out = np.zeros(inter.shape, dtype=np.float64)
    np.divide(inter, union, out=out, where=union > 0)
    return out


def microtube_overlap(a, b):
    """
    Mean of the IoUs of the two endpoint boxes. The deltas of the two
    micro-tubes are not compared.
    """
    return (iou(a.box_start, b.box_start) + iou(a.box_end, b.box_end)) / 2.0


def microtube_overlap_many(tube, pairs):
    """
    Overlap of one micro-tube against an (M, 2, 4) array of box pairs
    :return: (M,) array
    """
    pairs = np.asarray(pairs, dtype=np.float64).reshape(-1, 2, 4)
    return (iou_many(tube.box_start, pairs[:, 0]) +
            iou_many(tube.box_end, pairs[:, 1])) / 2.0


def translate(box, dx, dy):
    return Box(box[0] + dx, box[1] + dy, box[2] + dx, box[3] + dy)


def clip(box, low=0.0, high=1.0):
    return Box(*np.clip(np.asarray(box, dtype=np.float64), low, high))


def interpolate_boxes(box_a, box_b, steps):
    """
    Coordinate-wise linear interpolation from box_a to box_b inclusive
    :param steps: number of frame steps between the two boxes
    :return: (steps + 1, 4) array
    """
    a = np.asarray(box_a, dtype=np.float64)
    b = np.asarray(box_b, dtype=np.float64)
    weights = np.arange(steps + 1, dtype=np.float64)[:, None] / steps
    return a[None, :] * (1.0 - weights) + b[None, :] * weights
