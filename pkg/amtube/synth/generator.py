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
Synthetic ground truth: boxes moving over the unit square image.
"""
import logging
import zlib

import numpy as np

from amtube.datasets.video_annotation import (AnnotationSet, Tube,
                                              VideoAnnotation)
from amtube.exceptions import ValidationError
from amtube.geometry.box import Box, MicroTube
from amtube.synth.motion_spec import MotionSpec

logger = logging.getLogger(__name__)


def video_rng(seed, video):
    """
    Random stream of one video. Streams depend only on the seed and the
    video, so videos can be produced in any order or in parallel.
    :param video: video index or video id
    """
    if isinstance(video, str):
        video = zlib.crc32(video.encode("utf-8"))
    return np.random.default_rng([int(seed), int(video)])


def video_id(index):
    return "video_%05d" % index


def _steps(spec, rng, n):
    if spec.kind == "static":
        return np.zeros((n, 2))
    if spec.kind == "linear_drift":
        return np.tile(spec.velocity, (n, 1))
    return np.asarray(spec.velocity) + rng.normal(0.0, spec.step_sigma,
                                                  size=(n, 2))


def generate_tube(spec, rng):
    """
    One action instance following a motion spec. The start position is
    drawn so the whole trajectory stays inside the image when it can;
    otherwise positions are clamped to the image.
    :return: Tube
    """
    duration = int(rng.integers(spec.duration[0], spec.duration[1] + 1))
    start = int(rng.integers(0, spec.n_frames - duration + 1))
    size = rng.uniform(spec.box_size[0], spec.box_size[1], size=2)

    travel = np.zeros((duration, 2))
    travel[1:] = np.cumsum(_steps(spec, rng, duration - 1), axis=0)

    origin = np.empty(2)
    for axis in range(2):
        low = max(0.0, -travel[:, axis].min())
        high = 1.0 - size[axis] - travel[:, axis].max()
        if low > high:
            low, high = 0.0, 1.0 - size[axis]
        origin[axis] = rng.uniform(low, high)

    corners = np.clip(origin + travel, 0.0, 1.0 - size)
    keyframes = []
    for offset in range(0, duration, spec.sparsity):
        x, y = corners[offset]
        keyframes.append((start + offset,
                          Box(x, y, x + size[0], y + size[1])))
    return Tube(spec.label, keyframes)


def generate_video(specs, index, seed):
    spec = specs[index % len(specs)]
    rng = video_rng(seed, index)
    tubes = [generate_tube(spec, rng) for _ in range(spec.tubes_per_video)]
    return VideoAnnotation(video_id(index), spec.n_frames, tubes)


def generate_dataset(specs, n_videos, seed, dataset="synthetic"):
    """
    Generate annotated videos. Video k follows spec k modulo the number of
    specs.
    :param specs: MotionSpec or list of MotionSpec
    :param n_videos: number of videos
    :param seed: integer seed
    :return: AnnotationSet in normalized coordinates
    """
    if isinstance(specs, MotionSpec):
        specs = [specs]
    specs = list(specs)
    if not specs:
        raise ValidationError("At least one motion spec is needed")

    videos = [generate_video(specs, k, seed) for k in range(n_videos)]
    logger.info("Generated %d videos with %d tubes from %d motion specs",
                len(videos), sum(len(v.tubes) for v in videos), len(specs))
    return AnnotationSet(videos, dataset=dataset)


def extract_labelled_microtubes(video, delta):
    """
    Every pair of annotated frames exactly delta apart, per tube. A tube
    with a single keyframe gives one micro-tube with that box twice.
    :return: list of (label, MicroTube)
    """
    result = []
    for tube in video.tubes:
        boxes = dict(tube.keyframes)
        if len(boxes) == 1:
            frame, box = tube.keyframes[0]
            result.append((tube.label, MicroTube(frame, delta, box, box)))
            continue
        for frame, box in tube.keyframes:
            end = boxes.get(frame + delta)
            if end is not None:
                result.append((tube.label,
                               MicroTube(frame, delta, box, end)))
    return result


def extract_microtubes(video, delta):
    return [m for _, m in extract_labelled_microtubes(video, delta)]


def dataset_microtubes(annotations, delta):
    """
    Labelled micro-tubes of every video, in video id order
    """
    return [item for video in annotations
            for item in extract_labelled_microtubes(video, delta)]
