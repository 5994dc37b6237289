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
Temporal trimming of action paths.

Every frame gets a binary label, action or background. The labelling
maximizes the sum of per frame potentials, s(t) for action and 1 - s(t) for
background, minus alpha for every label switch. Among optimal labellings the
one preferring background at the latest frames wins.
"""
import numpy as np

from amtube.exceptions import ValidationError
from amtube.linking.action_path import ActionPath

BACKGROUND = 0
ACTION = 1


def viterbi_labels(scores, alpha):
    """
    :param scores: per frame action scores in [0, 1]
    :param alpha: switching cost, non-negative
    :return: int array of labels, 1 for action
    """
    scores = np.asarray(scores, dtype=np.float64).ravel()
    if len(scores) == 0:
        raise ValidationError("Cannot trim an empty score sequence")
    if alpha < 0:
        raise ValidationError("Switching cost must be non-negative")

    potentials = np.stack([1.0 - scores, scores], axis=1)
    n = len(scores)
    value = potentials[0].copy()
    back = np.zeros((n, 2), dtype=np.int64)
    for t in range(1, n):
        new_value = np.empty(2)
        for label in (BACKGROUND, ACTION):
            from_background = value[BACKGROUND] - \
                (alpha if label != BACKGROUND else 0.0)
            from_action = value[ACTION] - (alpha if label != ACTION else 0.0)
            # ties go to background
            if from_background >= from_action:
                back[t, label] = BACKGROUND
                new_value[label] = from_background
            else:
                back[t, label] = ACTION
                new_value[label] = from_action
            new_value[label] += potentials[t, label]
        value = new_value

    labels = np.empty(n, dtype=np.int64)
    labels[-1] = BACKGROUND if value[BACKGROUND] >= value[ACTION] else ACTION
    for t in range(n - 1, 0, -1):
        labels[t - 1] = back[t, labels[t]]
    return labels


def segments(labels):
    """
    Maximal runs of action labels
    :return: list of [first index, last index], inclusive
    """
    labels = np.asarray(labels)
    padded = np.concatenate([[0], labels, [0]])
    edges = np.flatnonzero(np.diff(padded))
    return [[int(a), int(b) - 1] for a, b in zip(edges[::2], edges[1::2])]


def trim(scores, alpha):
    """
    Action segments of a per frame score sequence
    :return: list of [start, end] index pairs, inclusive
    """
    return segments(viterbi_labels(scores, alpha))


def trim_path(path, alpha):
    """
    Split a linked path into its action segments. Each segment is scored
    by the mean of its frame scores.
    :return: list of ActionPath
    """
    if path.frame_scores is None:
        raise ValidationError("Trimming needs per frame scores")
    trimmed = []
    for first, last in trim(path.frame_scores, alpha):
        frame_scores = path.frame_scores[first:last + 1]
        trimmed.append(ActionPath(
            path.video_id, path.label, path.frames[first:last + 1],
            path.boxes[first:last + 1], frame_scores,
            score=float(np.mean(frame_scores))))
    return trimmed
