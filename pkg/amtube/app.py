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
from functools import partial

from amtube.anchors.anchor_set import build_pyramid
from amtube.datasets.artifacts import detections_by_video
from amtube.exceptions import EmptyGroundTruthError
from amtube.executors.broadcast import SharedValue
from amtube.linking.linker import link
from amtube.linking.scored_microtube import (group_detections,
                                              split_lattices)
from amtube.linking.trimming import trim_path
from amtube.synth.generator import extract_microtubes
from amtube.transitions.accumulator import TransitionCountsAccumulator
from amtube.transitions.transition_counts import estimate

logger = logging.getLogger(__name__)


def _link_job(job, params):
    video_id, label, detections = job
    return [path for lattice in split_lattices(detections)
            for path in link(group_detections(lattice), params, label)]


def _trim_job(path, alpha):
    return trim_path(path, alpha)


class App:
    def __init__(self, config):
        self.config = config
        self.executor = config.executor
        self.pyramid_config = config.pyramid_config
        self.link_params = config.link_params
        self._anchors = None

    @property
    def anchors(self):
        """
        Anchor set of the configured pyramid, built on first use
        """
        if self._anchors is None:
            self._anchors = build_pyramid(self.pyramid_config)
        return self._anchors

    def shards(self, items):
        """
        Split items round robin into at most num_partitions non-empty shards
        """
        items = list(items)
        n = max(1, self.config.num_partitions)
        return [items[k::n] for k in range(min(n, len(items)))]

    def estimate_transitions(self, annotations, delta):
        """
        Count best anchor cell transitions over the ground truth micro-tubes
        of every video. Videos are sharded over the executor and the partial
        counts merged through an accumulator.
        :param annotations: AnnotationSet
        :param delta: micro-tube frame gap
        :return: TransitionCounts
        """
        annotations = annotations.to_normalized()
        anchors = SharedValue(self, self.anchors)
        accumulator = TransitionCountsAccumulator(self)
        handle = accumulator.accumulator

        def count_shard(videos):
            microtubes = [m for video in videos
                          for m in extract_microtubes(video, delta)]
            if microtubes:
                handle.add(estimate(microtubes, anchors.value, delta))

        self.executor.foreach(self.shards(annotations.videos), count_shard)
        counts = accumulator.value
        if counts is None:
            raise EmptyGroundTruthError(
                "No ground truth micro-tubes with delta %d" % delta)
        return counts

    def link_videos(self, detections, params=None):
        """
        Link every (video, class) pair independently
        :param detections: iterable of ScoredMicroTube
        :param params: LinkParams, the configured ones when None
        :return: list of ActionPath sorted by video id, class, start frame
        """
        params = params or self.link_params
        jobs = []
        for video_id, video_detections in detections_by_video(detections):
            num_classes = max(d.num_classes for d in video_detections)
            for label in range(1, num_classes + 1):
                jobs.append((video_id, label, video_detections))

        results = self.executor.map(jobs, partial(_link_job, params=params))
        paths = [path for result in results for path in result]
        paths.sort(key=lambda p: (p.video_id, p.label, p.t_start))
        logger.info("Linked %d paths from %d (video, class) jobs",
                    len(paths), len(jobs))
        return paths

    def trim_paths(self, paths, alpha):
        results = self.executor.map(list(paths), partial(_trim_job,
                                                         alpha=alpha))
        return [path for result in results for path in result]
