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

from amtube.exceptions import FrameAlignmentError, ValidationError
from amtube.geometry.box import Box, MicroTube


class ScoredMicroTube:
    """
    A detected micro-tube with its class confidences.

    Parameters
    ----------
        video_id: str
        microtube: MicroTube
        scores: sequence of float
            C + 1 softmax normalized confidences, index 0 is background
        stream: str, optional
            Detection stream that produced it, e.g. "rgb" or "flow"
        index: int, optional
            Position in the enumerated proposal set it was regressed from
    """

    def __init__(self, video_id, microtube, scores, stream="rgb",
                 index=None):
        self.video_id = str(video_id)
        self.microtube = microtube
        self.scores = np.asarray(scores, dtype=np.float64).ravel()
        if len(self.scores) < 2:
            raise ValidationError(
                "Detections need a background score and at least one class")
        if not np.all(np.isfinite(self.scores)) or \
                np.any(self.scores < 0) or np.any(self.scores > 1):
            raise ValidationError(
                "Detection scores must be finite and within [0, 1]")
        self.stream = stream
        self.index = index if index is None else int(index)

    @property
    def frame_start(self):
        return self.microtube.frame_start

    @property
    def frame_end(self):
        return self.microtube.frame_end

    @property
    def delta(self):
        return self.microtube.delta

    @property
    def box_start(self):
        return self.microtube.box_start

    @property
    def box_end(self):
        return self.microtube.box_end

    @property
    def num_classes(self):
        return len(self.scores) - 1

    def score(self, label):
        return float(self.scores[label])

    def to_dict(self):
        return {"video_id": self.video_id,
                "frame_start": self.frame_start,
                "delta": self.delta,
                "boxes": [self.box_start.to_list(), self.box_end.to_list()],
                "scores": self.scores.tolist(),
                "stream": self.stream,
                "index": self.index}

    @classmethod
    def from_dict(cls, values):
        try:
            start, end = values["boxes"]
            microtube = MicroTube(values["frame_start"], values["delta"],
                                  Box(*start), Box(*end))
            return cls(values["video_id"], microtube, values["scores"],
                       values.get("stream", "rgb"), values.get("index"))
        except (KeyError, TypeError) as e:
            raise ValidationError("Malformed detection: %s" % e)

    def __eq__(self, other):
        return isinstance(other, ScoredMicroTube) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "ScoredMicroTube(%s, frames %d-%d, scores=%s)" % (
            self.video_id, self.frame_start, self.frame_end,
            np.round(self.scores, 3).tolist())


def group_detections(detections):
    """
    Group the detections of one video by start frame on a lattice with step
    delta. Lattice positions without detections become empty groups.
    :param detections: iterable of ScoredMicroTube sharing one delta
    :return: list of (frame_start, list of ScoredMicroTube), sorted by frame
    """
    detections = list(detections)
    if not detections:
        return []
    deltas = {d.delta for d in detections}
    if len(deltas) != 1:
        raise FrameAlignmentError(
            "Detections of one video mix deltas %s" % sorted(deltas))
    delta = deltas.pop()

    by_start = {}
    for d in detections:
        by_start.setdefault(d.frame_start, []).append(d)
    first = min(by_start)
    last = max(by_start)
    for start in by_start:
        if (start - first) % delta:
            raise FrameAlignmentError(
                "Detection starting at frame %d is off the lattice %d + "
                "k * %d" % (start, first, delta))
    return [(start, by_start.get(start, []))
            for start in range(first, last + 1, delta)]


def split_lattices(detections):
    """
    Split the detections of one video into lattices of equal phase
    (start frame modulo delta), so each can be grouped and linked on its own
    :return: list of detection lists, by increasing phase
    """
    detections = list(detections)
    deltas = {d.delta for d in detections}
    if len(deltas) > 1:
        raise FrameAlignmentError(
            "Detections of one video mix deltas %s" % sorted(deltas))
    by_phase = {}
    for d in detections:
        by_phase.setdefault(d.frame_start % d.delta, []).append(d)
    return [by_phase[phase] for phase in sorted(by_phase)]
