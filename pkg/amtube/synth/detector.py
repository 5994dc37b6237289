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
Oracle detector. Every ground truth tube is detected along its own frame
lattice t_start, t_start + delta, ..., so a zero noise detection of a tube
annotated every delta frames is its ground truth micro-tubes. Poisson
distributed distractors drawn from the anchor micro-tube proposals are
placed on the lattices of the video.
"""
import logging
import zlib

import numpy as np

from amtube.exceptions import ValidationError
from amtube.geometry.box import Box, MicroTube
from amtube.linking.scored_microtube import ScoredMicroTube
from amtube.proposals.anchor_microtube import (enumerate_proposals,
                                               proposal_pairs)
from amtube.synth.generator import video_rng
from amtube.transitions.augmentation import augment_diagonal
from amtube.transitions.transition_matrix import BinaryTransitions

logger = logging.getLogger(__name__)

# class score range of a distractor; the rest goes to background
DISTRACTOR_SCORES = (0.05, 0.45)


class NoiseSpec:
    """
    Parameters
    ----------
        jitter: float
            Standard deviation of the gaussian noise added to every box
            coordinate, in units of the box width (x) or height (y)
        true_score: float
            Score of the true class of a ground truth detection
        distractor_rate: float
            Mean number of distractors per lattice step
        miss_rate: float
            Probability of dropping a ground truth detection
    """
    fields = ["jitter", "true_score", "distractor_rate", "miss_rate"]

    def __init__(self, jitter=0.0, true_score=1.0, distractor_rate=0.0,
                 miss_rate=0.0):
        self.jitter = float(jitter)
        self.true_score = float(true_score)
        self.distractor_rate = float(distractor_rate)
        self.miss_rate = float(miss_rate)
        if self.jitter < 0 or self.distractor_rate < 0:
            raise ValidationError(
                "Jitter and distractor rate must not be negative")
        if not (0.0 < self.true_score <= 1.0):
            raise ValidationError("true_score must be in (0, 1]")
        if not (0.0 <= self.miss_rate <= 1.0):
            raise ValidationError("miss_rate must be in [0, 1]")

    def to_dict(self):
        return {field: getattr(self, field) for field in self.fields}

    @classmethod
    def from_dict(cls, values):
        unknown = set(values) - set(cls.fields)
        if unknown:
            raise ValidationError("Unknown noise keys: %s" % sorted(unknown))
        return cls(**values)


def stream_rng(seed, video_id, stream):
    return np.random.default_rng([int(seed),
                                  zlib.crc32(video_id.encode("utf-8")),
                                  zlib.crc32(stream.encode("utf-8"))])


def tube_boxes(tube):
    """
    Boxes of every frame a tube spans, linearly interpolated between
    keyframes
    :return: dict frame -> (4,) array
    """
    frames = np.asarray(tube.frames)
    coords = np.array([box for _, box in tube.keyframes], dtype=np.float64)
    span = np.arange(tube.t_start, tube.t_end + 1)
    boxes = np.stack([np.interp(span, frames, coords[:, k])
                      for k in range(4)], axis=1)
    return dict(zip(span.tolist(), boxes))


def _jittered(pair, rng, sigma):
    sizes = pair[:, 2:] - pair[:, :2]
    pair = pair + rng.normal(0.0, sigma, size=(2, 4)) * np.tile(sizes, 2)
    pair = np.clip(pair, 0.0, 1.0)
    pair[:, [0, 2]] = np.sort(pair[:, [0, 2]], axis=1)
    pair[:, [1, 3]] = np.sort(pair[:, [1, 3]], axis=1)
    return pair


def _true_scores(label, num_classes, score):
    scores = np.zeros(num_classes + 1)
    scores[label] = score
    scores[0] = 1.0 - score
    return scores


def _ground_truth_steps(video, delta):
    """
    Micro-tubes of every tube along its own lattice. A tube spanning fewer
    than delta frames gives one micro-tube from its first to its last box,
    moved back when it would run past the end of the video.
    :return: dict start frame -> list of (label, (2, 4) boxes)
    """
    steps = {}
    if video.n_frames <= delta:
        return steps
    for tube in video.tubes:
        boxes = tube_boxes(tube)
        if tube.t_end - tube.t_start < delta:
            start = min(tube.t_start, video.n_frames - 1 - delta)
            pairs = [(start, (boxes[tube.t_start], boxes[tube.t_end]))]
        else:
            pairs = [(s, (boxes[s], boxes[s + delta]))
                     for s in range(tube.t_start, tube.t_end - delta + 1,
                                    delta)]
        for start, pair in pairs:
            steps.setdefault(start, []).append(
                (tube.label, np.array(pair, dtype=np.float64)))
    return steps


def _lattice(n_frames, delta, phases):
    """
    Start frames of every lattice with one of the given phases, in order
    """
    return sorted({start for phase in phases
                   for start in range(phase, n_frames - delta, delta)})


def simulate_video(video, proposals, noise, seed, delta, num_classes,
                   stream="rgb"):
    """
    Detections of one video, in start frame order. The choice of misses and
    distractors depends on (seed, video) only, so streams simulated with
    the same seed describe the same detection slots; box jitter also
    depends on the stream.
    """
    layout = video_rng(seed, video.video_id)
    jitter = stream_rng(seed, video.video_id, stream)
    pairs = proposal_pairs(proposals)
    truth = _ground_truth_steps(video, delta)
    phases = {start % delta for start in truth} or {0}

    detections = []
    for start in _lattice(video.n_frames, delta, phases):
        for label, boxes in truth.get(start, []):
            missed = layout.uniform() < noise.miss_rate
            boxes = _jittered(boxes, jitter, noise.jitter)
            if missed:
                continue
            detections.append(ScoredMicroTube(
                video.video_id,
                MicroTube(start, delta, Box(*boxes[0]), Box(*boxes[1])),
                _true_scores(label, num_classes, noise.true_score),
                stream=stream))

        n_distractors = int(layout.poisson(noise.distractor_rate))
        if n_distractors and not len(pairs):
            raise ValidationError("Distractors need at least one proposal")
        for _ in range(n_distractors):
            index = int(layout.integers(len(pairs)))
            label = int(layout.integers(1, num_classes + 1))
            score = layout.uniform(*DISTRACTOR_SCORES)
            boxes = np.clip(pairs[index], 0.0, 1.0)
            detections.append(ScoredMicroTube(
                video.video_id,
                MicroTube(start, delta, Box(*boxes[0]), Box(*boxes[1])),
                _true_scores(label, num_classes, score),
                stream=stream, index=index))
    return detections


def simulate_detections(annotations, anchors, transitions=None, noise=None,
                        seed=0, delta=1, num_classes=None, stream="rgb",
                        proposals=None):
    """
    :param annotations: AnnotationSet
    :param anchors: AnchorSet distractors are placed on
    :param transitions: BinaryTransitions giving the distractor proposals.
        Anchor cuboids when neither transitions nor proposals are given.
    :param noise: NoiseSpec, no noise when None
    :param seed: integer seed
    :param delta: frame gap of the detected micro-tubes
    :param num_classes: number of action classes, the largest annotated
        class id when None
    :param stream: stream tag of the detections
    :param proposals: already enumerated AnchorMicroTube list, instead of
        transitions
    :return: list of ScoredMicroTube sorted by video id, then start frame
    """
    if delta < 1:
        raise ValidationError("delta must be at least 1")
    if transitions is not None and proposals is not None:
        raise ValidationError(
            "Give distractor transitions or proposals, not both")
    noise = noise or NoiseSpec()
    annotations = annotations.to_normalized()
    if num_classes is None:
        num_classes = max(annotations.labels or [1])
    elif annotations.labels and num_classes < max(annotations.labels):
        raise ValidationError(
            "num_classes %d is below the largest class id %d" %
            (num_classes, max(annotations.labels)))
    if proposals is None:
        if transitions is None:
            transitions = augment_diagonal(BinaryTransitions.empty(
                anchors.config.grid_sizes, config_hash=anchors.config_hash))
        proposals = enumerate_proposals(transitions, anchors)
    proposals = list(proposals)

    detections = []
    for video in annotations:
        detections.extend(simulate_video(video, proposals, noise, seed,
                                         delta, num_classes, stream))
    logger.info("Simulated %d %s detections over %d videos",
                len(detections), stream, len(annotations))
    return detections
