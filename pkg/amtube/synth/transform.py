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
Annotation geometry of a padded dataset variant. Each video is placed at a
random offset on a canvas larger than the original frames; every box of the
video moves by the same offset.
"""
import logging

from amtube.datasets.video_annotation import AnnotationSet
from amtube.exceptions import ValidationError
from amtube.geometry.box import translate
from amtube.synth.generator import video_rng

logger = logging.getLogger(__name__)

MAX_PAD_X = 32
MAX_PAD_Y = 20
IMAGE_W = 320
IMAGE_H = 240


def sample_pads(video_id, max_pad_x, max_pad_y, seed):
    """
    Left and top padding of one video, uniform over 0..max_pad inclusive.
    The right and bottom edges get the remainder.
    """
    rng = video_rng(seed, video_id)
    left = int(rng.integers(0, max_pad_x + 1))
    top = int(rng.integers(0, max_pad_y + 1))
    return left, top


def transform_annotations(annotations, max_pad_x=MAX_PAD_X,
                          max_pad_y=MAX_PAD_Y, image_w=IMAGE_W,
                          image_h=IMAGE_H, seed=0):
    """
    :param annotations: AnnotationSet. Normalized annotations are first
        scaled to image_w x image_h pixels.
    :return: AnnotationSet in pixels over a canvas of
        (width + max_pad_x, height + max_pad_y)
    """
    if max_pad_x < 0 or max_pad_y < 0:
        raise ValidationError("Padding must not be negative")
    if annotations.image_size is None:
        annotations = annotations.to_pixels(image_w, image_h)
    width, height = annotations.image_size

    videos = []
    for video in annotations:
        left, top = sample_pads(video.video_id, max_pad_x, max_pad_y, seed)
        videos.append(video.map_boxes(
            lambda box, dx=left, dy=top: translate(box, dx, dy)))
        logger.debug("Padded %s by left=%d top=%d", video.video_id, left,
                     top)

    return AnnotationSet(videos, dataset=annotations.dataset,
                         image_size=[width + max_pad_x, height + max_pad_y])
