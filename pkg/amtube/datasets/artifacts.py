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
Files passed between pipeline stages.

Transition files are one JSON document::

    {"format_version": 1, "kind": "counts" | "matrix" | "binary",
     "pyramid_config_hash": "...", "delta": 10, "normalized": false,
     "tau": null,
     "levels": [{"p": 0, "rows": 1444, "cols": 1444,
                 "entries": [[i, j, value], ...]}, ...]}

Binary transitions store ``[i, j]`` entries. Proposals, detections and
paths are JSON lines, one record per line with sorted keys.
"""
import json
import logging
from itertools import groupby

import numpy as np
import scipy.sparse

from amtube.exceptions import ConfigHashMismatch, ValidationError
from amtube.linking.action_path import ActionPath
from amtube.linking.scored_microtube import ScoredMicroTube
from amtube.proposals.anchor_microtube import AnchorMicroTube
from amtube.transitions.transition_counts import TransitionCounts
from amtube.transitions.transition_matrix import (BinaryTransitions,
                                                  TransitionMatrix)

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def _level_shapes(grid_sizes):
    return [(g * g, g * g) for g in grid_sizes]


def transitions_to_dict(transitions):
    """
    :param transitions: TransitionCounts, TransitionMatrix or
        BinaryTransitions
    """
    levels = []
    shapes = _level_shapes(transitions.grid_sizes)
    tau = None
    if isinstance(transitions, BinaryTransitions):
        kind = "binary"
        tau = transitions.tau
        for p, (rows, cols) in enumerate(shapes):
            levels.append({"p": p, "rows": rows, "cols": cols,
                           "entries": [[i, j] for i, j in
                                       transitions.sorted_pairs(p)]})
    elif isinstance(transitions, (TransitionCounts, TransitionMatrix)):
        kind = ("counts" if isinstance(transitions, TransitionCounts)
                else "matrix")
        for p, (rows, cols) in enumerate(shapes):
            levels.append({"p": p, "rows": rows, "cols": cols,
                           "entries": [list(e) for e in
                                       transitions.entries(p)]})
    else:
        raise TypeError("Not a transition object: %r" % (transitions,))

    return {"format_version": FORMAT_VERSION,
            "kind": kind,
            "pyramid_config_hash": transitions.config_hash,
            "delta": transitions.delta,
            "normalized": kind == "matrix",
            "tau": tau,
            "levels": levels}


def transitions_from_dict(document):
    try:
        version = document["format_version"]
        kind = document["kind"]
        levels = sorted(document["levels"], key=lambda level: level["p"])
        config_hash = document.get("pyramid_config_hash")
        delta = document.get("delta")
    except (KeyError, TypeError) as e:
        raise ValidationError("Malformed transition document: %s" % e)

    if version != FORMAT_VERSION:
        raise ValidationError(
            "Unsupported transition format version %s" % version)

    grid_sizes = []
    for p, level in enumerate(levels):
        if level["p"] != p or level["rows"] != level["cols"]:
            raise ValidationError("Transition levels must be square and "
                                  "numbered from 0")
        grid = int(round(level["rows"] ** 0.5))
        if grid * grid != level["rows"]:
            raise ValidationError(
                "Level %d has %d rows, not a square grid" %
                (p, level["rows"]))
        grid_sizes.append(grid)

    if kind == "binary":
        return BinaryTransitions(
            grid_sizes, [[(i, j) for i, j in level["entries"]]
                         for level in levels],
            tau=document.get("tau"), config_hash=config_hash, delta=delta)

    if kind == "counts":
        return TransitionCounts.from_entries(
            grid_sizes,
            ((p, i, j, value) for p, level in enumerate(levels)
             for i, j, value in level["entries"]),
            config_hash=config_hash, delta=delta)

    if kind == "matrix":
        matrix_levels = []
        for level in levels:
            entries = level["entries"]
            matrix_levels.append(scipy.sparse.coo_matrix(
                (np.array([e[2] for e in entries], dtype=np.float64),
                 (np.array([e[0] for e in entries], dtype=np.int64),
                  np.array([e[1] for e in entries], dtype=np.int64))),
                shape=(level["rows"], level["cols"])))
        return TransitionMatrix(grid_sizes, matrix_levels,
                                config_hash=config_hash, delta=delta)

    raise ValidationError("Unknown transition kind %r" % kind)


def save_transitions(transitions, path):
    with open(path, "w") as f:
        json.dump(transitions_to_dict(transitions), f, sort_keys=True)
        f.write("\n")


def load_transitions(path, kind=None):
    """
    :param kind: required kind, or None to accept any
    """
    with open(path) as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as e:
            raise ValidationError("%s is not valid JSON: %s" % (path, e))
    transitions = transitions_from_dict(document)
    if kind is not None and document["kind"] != kind:
        raise ValidationError("%s holds %s transitions, expected %s" %
                              (path, document["kind"], kind))
    return transitions


def write_jsonl(records, path):
    with open(path, "w") as f:
        for record in records:
            f.write(json.dumps(record, sort_keys=True))
            f.write("\n")


def read_jsonl(path):
    records = []
    with open(path) as f:
        for n, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise ValidationError("%s line %d is not valid JSON: %s" %
                                      (path, n, e))
    return records


def save_proposals(proposals, config_hash, path):
    def records():
        for proposal in proposals:
            record = proposal.to_dict()
            record["pyramid_config_hash"] = config_hash
            yield record

    write_jsonl(records(), path)


def load_proposals(path, expected_hash=None):
    """
    :return: (list of AnchorMicroTube, pyramid config hash)
    """
    proposals = []
    config_hash = expected_hash
    for record in read_jsonl(path):
        found = record.get("pyramid_config_hash")
        if config_hash is None:
            config_hash = found
        elif found is not None and found != config_hash:
            raise ConfigHashMismatch(config_hash, found)
        try:
            proposals.append(AnchorMicroTube.from_dict(record))
        except (KeyError, TypeError) as e:
            raise ValidationError("Malformed proposal in %s: %s" % (path, e))
    return proposals, config_hash


def _video_order(item):
    return item.video_id


def save_detections(detections, path):
    """
    Detections are written grouped by video id, in start frame order within
    a video. Detections sharing a start frame keep their input order.
    """
    ordered = sorted(detections, key=lambda d: (d.video_id, d.frame_start))
    write_jsonl((d.to_dict() for d in ordered), path)


def load_detections(path):
    return [ScoredMicroTube.from_dict(r) for r in read_jsonl(path)]


def detections_by_video(detections):
    """
    :return: list of (video_id, detections) sorted by video id
    """
    ordered = sorted(detections, key=lambda d: (d.video_id, d.frame_start))
    return [(video_id, list(group))
            for video_id, group in groupby(ordered, key=_video_order)]


def save_paths(paths, path):
    ordered = sorted(paths, key=lambda p: (p.video_id, p.label, p.t_start))
    write_jsonl((p.to_dict() for p in ordered), path)


def load_paths(path):
    return [ActionPath.from_dict(r) for r in read_jsonl(path)]
