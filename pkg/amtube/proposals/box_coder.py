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
Center/size regression targets between anchor micro-tubes and boxes.

A target is a (2, 4) array, one ``(tx, ty, tw, th)`` row per endpoint frame.
"""
import numpy as np

from amtube.exceptions import ValidationError
from amtube.geometry.box import Box, MicroTube

CENTER_VARIANCE = 0.1
SIZE_VARIANCE = 0.2


def _center_size(boxes):
    boxes = np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
    w = boxes[:, 2] - boxes[:, 0]
    h = boxes[:, 3] - boxes[:, 1]
    if np.any(w <= 0) or np.any(h <= 0):
        raise ValidationError("Cannot encode against a zero area box")
    return boxes[:, 0] + w / 2.0, boxes[:, 1] + h / 2.0, w, h


def encode(microtube, anchor):
    """
    :param microtube: MicroTube to regress to
    :param anchor: AnchorMicroTube (or anything with box_start and box_end)
    :return: (2, 4) RegressionTarget
    """
    gx, gy, gw, gh = _center_size([microtube.box_start, microtube.box_end])
    ax, ay, aw, ah = _center_size([anchor.box_start, anchor.box_end])
    return np.stack([(gx - ax) / aw / CENTER_VARIANCE,
                     (gy - ay) / ah / CENTER_VARIANCE,
                     np.log(gw / aw) / SIZE_VARIANCE,
                     np.log(gh / ah) / SIZE_VARIANCE], axis=1)


def decode_boxes(anchor, target):
    """
    Inverse of encode without clipping
    :return: (2, 4) array of corner coordinates
    """
    target = np.asarray(target, dtype=np.float64).reshape(2, 4)
    if not np.all(np.isfinite(target)):
        raise ValidationError("Regression target must be finite")
    ax, ay, aw, ah = _center_size([anchor.box_start, anchor.box_end])
    cx = target[:, 0] * CENTER_VARIANCE * aw + ax
    cy = target[:, 1] * CENTER_VARIANCE * ah + ay
    w = np.exp(target[:, 2] * SIZE_VARIANCE) * aw
    h = np.exp(target[:, 3] * SIZE_VARIANCE) * ah
    return np.stack([cx - w / 2.0, cy - h / 2.0,
                     cx + w / 2.0, cy + h / 2.0], axis=1)


def decode(anchor, target, frame_start=0, delta=1, clip=True):
    """
    Regressed micro-tube for an anchor micro-tube
    :param clip: clip the boxes to the unit square
    :return: MicroTube
    """
    boxes = decode_boxes(anchor, target)
    if clip:
        boxes = np.clip(boxes, 0.0, 1.0)
    return MicroTube(frame_start, delta, Box(*boxes[0]), Box(*boxes[1]))
