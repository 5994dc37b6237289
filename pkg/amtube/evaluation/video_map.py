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
Video level detection metrics over action paths.

A detection is a true positive when its spatiotemporal IoU with a still
unmatched ground truth tube of the same class in the same video reaches
the threshold. Detections of one class are ranked by descending score,
then video id, then input order.
"""
import logging
from collections import defaultdict

import numpy as np

from amtube.evaluation.tube_iou import tube_st_iou
from amtube.linking.action_path import ActionPath

logger = logging.getLogger(__name__)

AVG_THRESHOLDS = [round(0.5 + 0.05 * i, 2) for i in range(10)]


def ground_truth_paths(annotations):
    """
    Every annotated tube of an AnnotationSet as an ActionPath
    """
    return [ActionPath.from_tube(video.video_id, tube)
            for video in annotations for tube in video.tubes]


def voc_ap(recall, precision):
    """
    Area under the precision/recall curve with precision made monotonically
    decreasing, all points interpolation
    """
    mrec = np.concatenate([[0.0], recall, [1.0]])
    mpre = np.concatenate([[0.0], precision, [0.0]])
    mpre = np.maximum.accumulate(mpre[::-1])[::-1]
    changes = np.flatnonzero(mrec[1:] != mrec[:-1]) + 1
    return float(np.sum((mrec[changes] - mrec[changes - 1]) * mpre[changes]))


def _rank(detections):
    order = sorted(range(len(detections)),
                   key=lambda k: (-detections[k].score,
                                  detections[k].video_id, k))
    return [detections[k] for k in order]


def class_ap(detections, gts, threshold):
    """
    Average precision of one class
    :param detections: ActionPath list of that class
    :param gts: ground truth ActionPath list of that class
    :param threshold: spatiotemporal IoU threshold
    """
    if not gts:
        return 0.0
    by_video = defaultdict(list)
    for gt in gts:
        by_video[gt.video_id].append(gt)
    matched = {video: [False] * len(tubes)
               for video, tubes in by_video.items()}

    ranked = _rank(detections)
    tp = np.zeros(len(ranked))
    for k, det in enumerate(ranked):
        candidates = by_video.get(det.video_id, [])
        best, best_iou = None, -1.0
        for g, gt in enumerate(candidates):
            if matched[det.video_id][g]:
                continue
            overlap = tube_st_iou(det, gt)
            if overlap > best_iou:
                best, best_iou = g, overlap
        if best is not None and best_iou >= threshold:
            matched[det.video_id][best] = True
            tp[k] = 1.0

    if len(ranked) == 0:
        return 0.0
    tp_cum = np.cumsum(tp)
    fp_cum = np.cumsum(1.0 - tp)
    recall = tp_cum / len(gts)
    precision = tp_cum / (tp_cum + fp_cum)
    return voc_ap(recall, precision)


def video_map(detections, gts, threshold):
    """
    Per class AP and their mean over the classes with ground truth
    :param detections: ActionPath list
    :param gts: ground truth ActionPath list
    :return: (dict class -> AP, mAP)
    """
    gts_by_class = defaultdict(list)
    for gt in gts:
        gts_by_class[gt.label].append(gt)
    dets_by_class = defaultdict(list)
    for det in detections:
        dets_by_class[det.label].append(det)

    per_class = {label: class_ap(dets_by_class.get(label, []), tubes,
                                 threshold)
                 for label, tubes in sorted(gts_by_class.items())}
    mean_ap = float(np.mean(list(per_class.values()))) if per_class else 0.0
    logger.info("video-mAP@%.2f = %.4f over %d classes", threshold, mean_ap,
                len(per_class))
    return per_class, mean_ap


def avg_map(detections, gts, thresholds=None):
    """
    Mean of video-mAP over the thresholds 0.50, 0.55, ..., 0.95
    :return: (average, dict threshold -> mAP)
    """
    thresholds = AVG_THRESHOLDS if thresholds is None else thresholds
    by_threshold = {t: video_map(detections, gts, t)[1] for t in thresholds}
    return float(np.mean(list(by_threshold.values()))), by_threshold


def classification_accuracy(detections, gts):
    """
    Fraction of ground truth videos whose best scoring path has one of the
    video's annotated classes. Videos without any path count as misses.
    """
    labels = defaultdict(set)
    for gt in gts:
        labels[gt.video_id].add(gt.label)
    if not labels:
        return 0.0

    top = {}
    for det in _rank(list(detections)):
        top.setdefault(det.video_id, det)
    correct = sum(1 for video, classes in labels.items()
                  if video in top and top[video].label in classes)
    return correct / len(labels)


def clip_to_ground_truth(detections, gts):
    """
    Trimmed evaluation protocol: clip every path to the frame span covered
    by the ground truth tubes of its video. Paths entirely outside that span
    are dropped; paths of videos without ground truth are kept as they are.
    """
    spans = {}
    for gt in gts:
        lo, hi = spans.get(gt.video_id, (gt.t_start, gt.t_end))
        spans[gt.video_id] = (min(lo, gt.t_start), max(hi, gt.t_end))

    clipped = []
    for det in detections:
        if det.video_id not in spans:
            clipped.append(det)
            continue
        kept = det.clip_frames(*spans[det.video_id])
        if kept is not None:
            clipped.append(kept)
    return clipped
