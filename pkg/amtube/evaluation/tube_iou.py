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
import numpy as np


def temporal_iou(a, b):
    """
    IoU of the inclusive frame extents of two paths
    """
    inter = min(a.t_end, b.t_end) - max(a.t_start, b.t_start) + 1
    if inter <= 0:
        return 0.0
    union = (a.t_end - a.t_start + 1) + (b.t_end - b.t_start + 1) - inter
    return inter / union


def tube_st_iou(a, b):
    """
    Spatiotemporal IoU of two paths: temporal IoU of their extents times the
    mean per frame IoU over the frames both of them hold a box for. Zero
    when they share no such frame.
    """
    t_iou = temporal_iou(a, b)
    if t_iou == 0.0:
        return 0.0
    common, in_a, in_b = np.intersect1d(a.frames, b.frames,
                                        assume_unique=True,
                                        return_indices=True)
    if len(common) == 0:
        return 0.0
    return float(t_iou * np.mean(frame_ious(a.boxes[in_a], b.boxes[in_b])))


def frame_ious(boxes_a, boxes_b):
    """
    IoU of aligned rows of two (N, 4) arrays
    """
    inter_w = (np.minimum(boxes_a[:, 2], boxes_b[:, 2]) -
               np.maximum(boxes_a[:, 0], boxes_b[:, 0]))
    inter_h = (np.minimum(boxes_a[:, 3], boxes_b[:, 3]) -
               np.maximum(boxes_a[:, 1], boxes_b[:, 1]))
    inter = np.clip(inter_w, 0, None) * np.clip(inter_h, 0, None)
    area_a = (boxes_a[:, 2] - boxes_a[:, 0]) * (boxes_a[:, 3] - boxes_a[:, 1])
    area_b = (boxes_b[:, 2] - boxes_b[:, 0]) * (boxes_b[:, 3] - boxes_b[:, 1])
    union = area_a + area_b - inter
    out = np.zeros(len(inter), dtype=np.float64)
    np.divide(inter, union, out=out, where=union > 0)
    return out
