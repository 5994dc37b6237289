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

from amtube.exceptions import ValidationError
from amtube.geometry.box import interpolate_boxes


class ActionPath:
    """
    Per frame boxes of one class in one video, with scores.

    Linked paths cover every frame of [t_start, t_end]. Ground truth tubes
    wrapped as paths may only hold their annotated frames.
    """

    def __init__(self, video_id, label, frames, boxes, frame_scores=None,
                 step_scores=None, score=None):
        self.video_id = str(video_id)
        self.label = int(label)
        self.frames = np.asarray(frames, dtype=np.int64).ravel()
        self.boxes = np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
        if len(self.frames) == 0 or len(self.frames) != len(self.boxes):
            raise ValidationError(
                "A path needs one box per frame and at least one frame")
        if np.any(np.diff(self.frames) <= 0):
            raise ValidationError("Path frames must be strictly increasing")
        self.frame_scores = (None if frame_scores is None else
                             np.asarray(frame_scores, dtype=np.float64))
        self.step_scores = ([] if step_scores is None else
                            [float(s) for s in step_scores])
        if score is None:
            if self.step_scores:
                score = float(np.mean(self.step_scores))
            elif self.frame_scores is not None:
                score = float(np.mean(self.frame_scores))
            else:
                score = 1.0
        self.score = float(score)

    @property
    def t_start(self):
        return int(self.frames[0])

    @property
    def t_end(self):
        return int(self.frames[-1])

    def __len__(self):
        return len(self.frames)

    def is_contiguous(self):
        return self.t_end - self.t_start + 1 == len(self.frames)

    @classmethod
    def from_tube(cls, video_id, tube):
        """
        Wrap an annotated ground truth Tube
        """
        return cls(video_id, tube.label, tube.frames,
                   [box.to_list() for _, box in tube.keyframes])

    def clip_frames(self, t_start, t_end):
        """
        Restrict to frames within [t_start, t_end]; None if nothing is left
        """
        keep = (self.frames >= t_start) & (self.frames <= t_end)
        if not np.any(keep):
            return None
        frame_scores = (None if self.frame_scores is None
                        else self.frame_scores[keep])
        return ActionPath(self.video_id, self.label, self.frames[keep],
                          self.boxes[keep], frame_scores,
                          self.step_scores, self.score)

    def to_dict(self):
        values = {"video_id": self.video_id, "class": self.label,
                  "t_start": self.t_start, "t_end": self.t_end,
                  "boxes": self.boxes.tolist(), "score": self.score,
                  "step_scores": [float(s) for s in self.step_scores]}
        if self.frame_scores is not None:
            values["frame_scores"] = self.frame_scores.tolist()
        if not self.is_contiguous():
            values["frames"] = self.frames.tolist()
        return values

    @classmethod
    def from_dict(cls, values):
        try:
            frames = values.get("frames")
            if frames is None:
                frames = np.arange(values["t_start"], values["t_end"] + 1)
            return cls(values["video_id"], values["class"], frames,
                       values["boxes"], values.get("frame_scores"),
                       values.get("step_scores"), values.get("score"))
        except (KeyError, TypeError) as e:
            raise ValidationError("Malformed path: %s" % e)

    def __repr__(self):
        return "ActionPath(%s, class %d, frames %d-%d, score %.3f)" % (
            self.video_id, self.label, self.t_start, self.t_end, self.score)


def interpolate(microtube):
    """
    Per frame boxes for frames frame_start .. frame_start + delta
    :return: (delta + 1, 4) array
    """
    return interpolate_boxes(microtube.box_start, microtube.box_end,
                             microtube.delta)


def assemble_path(video_id, label, detections):
    """
    Build a gap free path from chained detections. Frames shared by two
    micro-tubes average their boxes and scores; frames between micro-tubes
    that do not touch are linearly interpolated.
    :param detections: ScoredMicroTube list in time order
    """
    t_start = detections[0].frame_start
    t_end = detections[-1].frame_end
    n = t_end - t_start + 1
    box_sum = np.zeros((n, 4))
    score_sum = np.zeros(n)
    hits = np.zeros(n)

    for d in detections:
        lo = d.frame_start - t_start
        hi = d.frame_end - t_start + 1
        box_sum[lo:hi] += interpolate(d.microtube)
        score_sum[lo:hi] += d.score(label)
        hits[lo:hi] += 1

    covered = hits > 0
    boxes = np.zeros((n, 4))
    scores = np.zeros(n)
    boxes[covered] = box_sum[covered] / hits[covered, None]
    scores[covered] = score_sum[covered] / hits[covered]
    if not np.all(covered):
        frames = np.arange(n)
        for k in range(4):
            boxes[~covered, k] = np.interp(frames[~covered],
                                           frames[covered], boxes[covered, k])
        scores[~covered] = np.interp(frames[~covered], frames[covered],
                                     scores[covered])

    return ActionPath(video_id, label, np.arange(t_start, t_end + 1), boxes,
                      frame_scores=scores,
                      step_scores=[d.score(label) for d in detections])
