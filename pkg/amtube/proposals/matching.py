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

import numpy as np

from amtube.exceptions import ValidationError
from amtube.geometry.box import microtube_overlap_many
from amtube.proposals.anchor_microtube import proposal_pairs

logger = logging.getLogger(__name__)

DEFAULT_IOU_MIN = 0.5


def overlap_table(gts, proposals):
    """
    Micro-tube overlap of every ground truth against every proposal
    :return: (G, M) array
    """
    pairs = proposal_pairs(list(proposals))
    table = np.zeros((len(gts), len(pairs)), dtype=np.float64)
    for g, gt in enumerate(gts):
        table[g] = microtube_overlap_many(gt, pairs)
    return table


def best_overlaps(gts, proposals):
    """
    Best proposal overlap for every ground truth micro-tube, 0 when there
    are no proposals
    """
    gts = list(gts)
    proposals = list(proposals)
    if not gts or not proposals:
        return np.zeros(len(gts), dtype=np.float64)
    pairs = proposal_pairs(proposals)
    return np.array([microtube_overlap_many(gt, pairs).max() for gt in gts])


def match_positives(gts, proposals, iou_min=DEFAULT_IOU_MIN):
    """
    Assign ground truth micro-tubes to proposals. A ground truth claims a
    proposal it overlaps by at least iou_min, and also its own best
    proposal whatever that overlap. Each claimed proposal goes to the
    claimant it overlaps most, lower index on ties.

    A best proposal with zero overlap is not forced; a ground truth no
    proposal touches stays unmatched.
    :param gts: list of MicroTube
    :param proposals: list of AnchorMicroTube
    :param iou_min: overlap threshold in (0, 1)
    :return: dict proposal index -> (gt index, overlap)
    """
    if not (0.0 < iou_min < 1.0):
        raise ValidationError("iou_min must be in (0, 1), got %s" % iou_min)
    gts = list(gts)
    proposals = list(proposals)
    if not gts or not proposals:
        return {}

    table = overlap_table(gts, proposals)
    rows = np.arange(len(gts))
    claims = table >= iou_min
    forced = table.argmax(axis=1)
    touching = table[rows, forced] > 0
    claims[rows[touching], forced[touching]] = True

    claimed = np.where(claims, table, -1.0)
    owner = claimed.argmax(axis=0)
    assignment = {int(m): (int(owner[m]), float(table[owner[m], m]))
                  for m in np.flatnonzero(claims.any(axis=0))}
    logger.debug("Matched %d proposals to %d ground truths", len(assignment),
                 len(gts))
    return assignment


def proposal_recall(gts, proposals, min_overlap):
    """
    Fraction of ground truth micro-tubes whose best proposal overlap is at
    least min_overlap
    """
    overlaps = best_overlaps(gts, proposals)
    if len(overlaps) == 0:
        return 0.0
    return float(np.mean(overlaps >= min_overlap))
