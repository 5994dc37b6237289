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
import logging

from amtube.exceptions import ValidationError
from amtube.geometry.box import Box, MicroTube
from amtube.linking.scored_microtube import ScoredMicroTube

logger = logging.getLogger(__name__)


def _same_slot(a, b):
    if a.video_id != b.video_id or a.frame_start != b.frame_start or \
            a.delta != b.delta:
        return False
    return a.index is None or b.index is None or a.index == b.index


def fuse_streams(stream_a, stream_b, stream="fused"):
    """
    Mean fusion of two detection streams enumerating the same proposals in
    the same order. Class scores and box coordinates are averaged.
    :return: list of ScoredMicroTube
    """
    stream_a = list(stream_a)
    stream_b = list(stream_b)
    if len(stream_a) != len(stream_b):
        raise ValidationError(
            "Cannot fuse streams of %d and %d detections" %
            (len(stream_a), len(stream_b)))

    fused = []
    for k, (a, b) in enumerate(zip(stream_a, stream_b)):
        if not _same_slot(a, b):
            raise ValidationError(
                "Detection %d differs between streams: %r vs %r" % (k, a, b))
        if len(a.scores) != len(b.scores):
            raise ValidationError(
                "Detection %d has %d scores in one stream and %d in the "
                "other" % (k, len(a.scores), len(b.scores)))
        boxes = (a.microtube.as_array() + b.microtube.as_array()) / 2.0
        microtube = MicroTube(a.frame_start, a.delta, Box(*boxes[0]),
                              Box(*boxes[1]))
        index = a.index if a.index is not None else b.index
        fused.append(ScoredMicroTube(a.video_id, microtube,
                                     (a.scores + b.scores) / 2.0,
                                     stream=stream, index=index))
    logger.info("Fused %d detections", len(fused))
    return fused
