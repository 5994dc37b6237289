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
from jinja2 import Environment, PackageLoader, select_autoescape

from amtube.evaluation.video_map import (AVG_THRESHOLDS,
                                         classification_accuracy,
                                         clip_to_ground_truth, video_map)

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLDS = [0.2, 0.5, 0.75]


def threshold_key(threshold):
    return "%.2f" % threshold


class EvaluationReport:
    """
    Evaluates action paths against ground truth tubes and renders the result
    as a JSON document or a text table.
    """
    template_name = "report.txt"

    def __init__(self):
        self.env = Environment(
            loader=PackageLoader('amtube', 'templates'),
            autoescape=select_autoescape([])
        )

    def evaluate(self, detections, gts, thresholds=None, average=False,
                 trimmed_protocol=False):
        """
        :param detections: ActionPath list
        :param gts: ground truth ActionPath list
        :param thresholds: spatiotemporal IoU thresholds
        :param average: also evaluate the ten thresholds of avg-mAP
        :param trimmed_protocol: clip paths to the ground truth span of
            their video first
        :return: report dict
        """
        detections = list(detections)
        if trimmed_protocol:
            detections = clip_to_ground_truth(detections, gts)

        if thresholds is None:
            thresholds = AVG_THRESHOLDS if average else DEFAULT_THRESHOLDS
        thresholds = sorted(set(thresholds) |
                            (set(AVG_THRESHOLDS) if average else set()))

        per_class_ap = {}
        map_by_delta = {}
        for threshold in thresholds:
            per_class, mean_ap = video_map(detections, gts, threshold)
            key = threshold_key(threshold)
            per_class_ap[key] = {str(label): ap
                                 for label, ap in per_class.items()}
            map_by_delta[key] = mean_ap

        avg_map = None
        if average:
            avg_map = float(np.mean([map_by_delta[threshold_key(t)]
                                     for t in AVG_THRESHOLDS]))

        return {"per_class_ap": per_class_ap,
                "map_by_delta": map_by_delta,
                "avg_map": avg_map,
                "accuracy": classification_accuracy(detections, gts),
                "n_videos": len({gt.video_id for gt in gts}),
                "n_detections": len(detections)}

    def render(self, report):
        template = self.env.get_template(self.template_name)
        classes = sorted({label for aps in report["per_class_ap"].values()
                          for label in aps}, key=int)
        return template.render(report=report, classes=classes,
                               thresholds=sorted(report["map_by_delta"]))
