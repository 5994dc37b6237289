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
Online greedy linking of detection micro-tubes into action paths.

At every step the active paths, best aggregate score first, each claim the
unclaimed candidate maximizing ``score_c + iou_weight * iou(path end box,
candidate start box)`` among candidates that overlap the path at all.
Candidates nobody claims start new paths; a path left without a candidate
for ``max_misses`` consecutive steps is closed.
"""
import logging

import yaml

from amtube.exceptions import FrameAlignmentError, ValidationError
from amtube.geometry.box import iou
from amtube.linking.action_path import assemble_path
from amtube.linking.nms import nms_microtubes

logger = logging.getLogger(__name__)


class LinkParams:
    fields = ["iou_weight", "score_floor", "max_misses", "nms_threshold",
              "top_n"]

    def __init__(self, iou_weight=1.0, score_floor=0.05, max_misses=3,
                 nms_threshold=0.45, top_n=10):
        self.iou_weight = float(iou_weight)
        self.score_floor = float(score_floor)
        self.max_misses = int(max_misses)
        self.nms_threshold = float(nms_threshold)
        self.top_n = int(top_n)
        if self.iou_weight < 0:
            raise ValidationError("iou_weight must be non-negative")
        if self.max_misses < 1:
            raise ValidationError("max_misses must be at least 1")
        if self.top_n < 1:
            raise ValidationError("top_n must be at least 1")
        if not (0.0 <= self.nms_threshold <= 1.0):
            raise ValidationError("nms_threshold must be within [0, 1]")

    def to_dict(self):
        return {field: getattr(self, field) for field in self.fields}

    @classmethod
    def from_dict(cls, values):
        unknown = set(values) - set(cls.fields)
        if unknown:
            raise ValidationError(
                "Unknown link parameters: %s" % sorted(unknown))
        return cls(**values)

    @classmethod
    def from_yaml(cls, path):
        with open(path) as f:
            values = yaml.safe_load(f) or {}
        return cls.from_dict(values)

    def replace(self, **overrides):
        values = self.to_dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return LinkParams(**values)

    def __eq__(self, other):
        return isinstance(other, LinkParams) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "LinkParams(%s)" % ", ".join(
            "%s=%s" % (k, v) for k, v in self.to_dict().items())


class _OpenPath:
    def __init__(self, order, detection, label):
        self.order = order
        self.detections = [detection]
        self.total = detection.score(label)
        self.misses = 0

    @property
    def score(self):
        return self.total / len(self.detections)

    @property
    def last_box(self):
        return self.detections[-1].box_end

    def extend(self, detection, label):
        self.detections.append(detection)
        self.total += detection.score(label)
        self.misses = 0


def _check_alignment(groups):
    for (start, dets), (next_start, _) in zip(groups, groups[1:]):
        for d in dets:
            if d.frame_start != start:
                raise FrameAlignmentError(
                    "Detection starting at %d filed under group %d" %
                    (d.frame_start, start))
            if d.frame_end != next_start:
                raise FrameAlignmentError(
                    "Group %d ends at frame %d but the next group starts at "
                    "%d" % (start, d.frame_end, next_start))
    if groups:
        start, dets = groups[-1]
        if any(d.frame_start != start for d in dets):
            raise FrameAlignmentError(
                "Detections filed under the wrong group %d" % start)


def step_candidates(detections, label, params):
    """
    Candidates of one step: above the score floor, suppressed, capped at
    top_n, best first
    """
    above = [d for d in detections if d.score(label) >= params.score_floor]
    return nms_microtubes(above, label, params.nms_threshold)[:params.top_n]


def link(groups, params, label):
    """
    Link the detections of one video for one class
    :param groups: list of (frame_start, list of ScoredMicroTube) sorted by
        frame, each group ending where the next starts
        (see group_detections)
    :param params: LinkParams
    :param label: class index
    :return: list of ActionPath in the order the paths were started
    """
    _check_alignment(groups)
    video_id = None
    active = []
    finished = []
    counter = 0

    for _, detections in groups:
        candidates = step_candidates(detections, label, params)
        if candidates and video_id is None:
            video_id = candidates[0].video_id
        claimed = [False] * len(candidates)

        for path in sorted(active, key=lambda p: (-p.score, p.order)):
            best = None
            best_value = None
            for k, candidate in enumerate(candidates):
                if claimed[k]:
                    continue
                overlap = iou(path.last_box, candidate.box_start)
                if overlap <= 0:
                    continue
                value = candidate.score(label) + params.iou_weight * overlap
                if best_value is None or value > best_value:
                    best, best_value = k, value
            if best is None:
                path.misses += 1
            else:
                claimed[best] = True
                path.extend(candidates[best], label)

        still_active = []
        for path in active:
            if path.misses >= params.max_misses:
                finished.append(path)
            else:
                still_active.append(path)
        active = still_active

        for k, candidate in enumerate(candidates):
            if not claimed[k]:
                active.append(_OpenPath(counter, candidate, label))
                counter += 1

    finished.extend(active)
    finished.sort(key=lambda p: p.order)
    paths = [assemble_path(video_id, label, p.detections) for p in finished]
    logger.debug("Linked %d paths for class %d in video %s", len(paths),
                 label, video_id)
    return paths
