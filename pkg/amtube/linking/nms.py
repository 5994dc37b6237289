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

from amtube.geometry.box import microtube_overlap_many


def nms_microtubes(detections, label, threshold):
    """
    Greedy suppression by descending class score. A detection is dropped
    when its micro-tube overlap with an already kept one exceeds threshold.
    Equal scores keep their input order.
    :param detections: list of ScoredMicroTube
    :param label: class index whose score ranks the detections
    :return: kept detections, best first
    """
    detections = list(detections)
    if not detections:
        return []
    scores = np.array([d.score(label) for d in detections])
    order = np.argsort(-scores, kind="stable")
    pairs = np.array([[d.box_start, d.box_end] for d in detections],
                     dtype=np.float64)

    kept = []
    suppressed = np.zeros(len(detections), dtype=bool)
    for k in order:
        if suppressed[k]:
            continue
        kept.append(detections[k])
        overlaps = microtube_overlap_many(detections[k], pairs)
        suppressed |= overlaps > threshold
    return kept
