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
Batch front end of the pipeline::

    synth gen -> synth transform -> estimate -> threshold -> propose
      -> synth detect -> link -> trim -> eval

Every stage reads and writes the files of ``amtube.datasets``. Errors are
reported as one JSON object on stderr with exit status 2.
"""
import argparse
import json
import logging
import sys

import yaml

from amtube.anchors.anchor_set import build_pyramid
from amtube.anchors.pyramid_config import PyramidConfig
from amtube.app import App
from amtube.config import Config
from amtube.datasets.artifacts import (load_detections, load_paths,
                                       load_proposals, load_transitions,
                                       save_detections, save_paths,
                                       save_proposals, save_transitions)
from amtube.datasets.video_annotation import (load_annotations,
                                              save_annotations)
from amtube.evaluation.report import DEFAULT_THRESHOLDS, EvaluationReport
from amtube.evaluation.video_map import ground_truth_paths
from amtube.exceptions import AmtubeError, ValidationError
from amtube.executors.local_executor import LocalExecutor
from amtube.linking.fusion import fuse_streams
from amtube.linking.linker import LinkParams
from amtube.proposals.anchor_microtube import (check_compatible,
                                               enumerate_proposals)
from amtube.synth.detector import NoiseSpec, simulate_detections
from amtube.synth.generator import generate_dataset
from amtube.synth.motion_spec import KINDS, MotionSpec
from amtube.synth.transform import (IMAGE_H, IMAGE_W, MAX_PAD_X, MAX_PAD_Y,
                                    transform_annotations)
from amtube.transitions.augmentation import AUGMENTATIONS
from amtube.transitions.transition_counts import TransitionCounts
from amtube.transitions.transition_matrix import (DEFAULT_TAU,
                                                  TransitionMatrix,
                                                  cardinality,
                                                  hypothesis_space, normalize,
                                                  threshold)

logger = logging.getLogger(__name__)


def _pair(text):
    values = [float(v) for v in text.split(",")]
    if len(values) != 2:
        raise argparse.ArgumentTypeError("expected two comma separated "
                                         "numbers, got %r" % text)
    return tuple(values)


def _int_pair(text):
    return tuple(int(v) for v in _pair(text))


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, "
                                         "got %r" % text)


def _pyramid_config(args):
    if args.config:
        return PyramidConfig.from_yaml(args.config)
    return PyramidConfig()


def make_app(args, pyramid_config=None, link_params=None):
    if args.executor == "spark":
        from amtube.executors.spark_executor import SparkExecutor
        executor = SparkExecutor(args.master, "amtube", args.partitions)
    else:
        executor = LocalExecutor()
    return App(Config(executor=executor, num_partitions=args.partitions,
                      pyramid_config=pyramid_config,
                      link_params=link_params))


def cmd_estimate(args):
    app = make_app(args, pyramid_config=_pyramid_config(args))
    annotations = load_annotations(args.annotations)
    counts = app.estimate_transitions(annotations, args.delta)
    logger.info("Transition counts per level: %s", counts.level_totals())
    save_transitions(counts if args.counts else normalize(counts), args.out)


def cmd_threshold(args):
    transitions = load_transitions(args.matrix)
    if isinstance(transitions, TransitionCounts):
        transitions = normalize(transitions)
    elif not isinstance(transitions, TransitionMatrix):
        raise ValidationError("%s holds binary transitions, expected a "
                              "matrix" % args.matrix)

    binary = threshold(transitions, args.tau)
    for name in args.augment or []:
        binary = AUGMENTATIONS[name](binary)
    per_level, total = cardinality(binary)
    off_diagonal = binary.offdiagonal_count()
    logger.info("Cardinalities %s (M=%d), off-diagonal %s (%d)",
                per_level, total, off_diagonal, sum(off_diagonal))
    save_transitions(binary, args.out)


def cmd_propose(args):
    anchors = build_pyramid(_pyramid_config(args))
    binary = load_transitions(args.bin, kind="binary")
    check_compatible(binary, anchors)
    kept, dense = hypothesis_space(binary, anchors)
    logger.info("Hypothesis space %d of %d dense anchor micro-tubes",
                kept, dense)
    save_proposals(enumerate_proposals(binary, anchors),
                   anchors.config_hash, args.out)


def cmd_synth_gen(args):
    if args.spec:
        specs = MotionSpec.from_yaml(args.spec)
    else:
        specs = [MotionSpec(kind=args.kind, velocity=args.velocity,
                            box_size=args.box_size, label=args.label,
                            duration=args.duration, n_frames=args.n_frames,
                            delta=args.delta, sparsity=args.sparsity,
                            tubes_per_video=args.tubes_per_video,
                            step_sigma=args.step_sigma)]
    annotations = generate_dataset(specs, args.n_videos, args.seed)
    save_annotations(annotations, args.out)


def cmd_synth_transform(args):
    annotations = load_annotations(args.annotations)
    transformed = transform_annotations(annotations, args.max_pad_x,
                                        args.max_pad_y, args.image_w,
                                        args.image_h, seed=args.seed)
    save_annotations(transformed, args.out)


def cmd_synth_detect(args):
    anchors = build_pyramid(_pyramid_config(args))
    transitions = None
    proposals = None
    if args.bin and args.proposals:
        raise ValidationError("Give --bin or --proposals, not both")
    if args.bin:
        transitions = load_transitions(args.bin, kind="binary")
    if args.proposals:
        proposals, _ = load_proposals(args.proposals,
                                      expected_hash=anchors.config_hash)
    noise = NoiseSpec(jitter=args.jitter, true_score=args.true_score,
                      distractor_rate=args.distractor_rate,
                      miss_rate=args.miss_rate)
    detections = simulate_detections(
        load_annotations(args.annotations), anchors, transitions=transitions,
        noise=noise, seed=args.seed, delta=args.delta,
        num_classes=args.num_classes, stream=args.stream,
        proposals=proposals)
    save_detections(detections, args.out)


def cmd_link(args):
    params = LinkParams.from_yaml(args.params) if args.params \
        else LinkParams()
    params = params.replace(iou_weight=args.iou_weight,
                            score_floor=args.score_floor,
                            max_misses=args.max_misses,
                            nms_threshold=args.nms_threshold,
                            top_n=args.top_n)
    app = make_app(args, link_params=params)
    save_paths(app.link_videos(load_detections(args.dets)), args.out)


def cmd_trim(args):
    if args.alpha < 0:
        raise ValidationError("alpha must not be negative")
    app = make_app(args)
    save_paths(app.trim_paths(load_paths(args.paths), args.alpha), args.out)


def cmd_eval(args):
    gts = ground_truth_paths(load_annotations(args.gt).to_normalized())
    reporter = EvaluationReport()
    thresholds = args.deltas
    if thresholds is None and not args.avg:
        thresholds = DEFAULT_THRESHOLDS
    report = reporter.evaluate(load_paths(args.paths), gts,
                               thresholds=thresholds, average=args.avg,
                               trimmed_protocol=args.trimmed_protocol)
    with open(args.report, "w") as f:
        json.dump(report, f, sort_keys=True, indent=2)
        f.write("\n")
    sys.stdout.write(reporter.render(report))


def cmd_fuse(args):
    fused = fuse_streams(load_detections(args.a), load_detections(args.b),
                         stream=args.stream)
    save_detections(fused, args.out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="amtube",
        description="Anchor micro-tube transitions, linking and evaluation")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--executor", default="local",
                        choices=["local", "spark"])
    parser.add_argument("--master", default="local[*]",
                        help="Spark master URL")
    parser.add_argument("--partitions", type=int, default=10)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    estimate = commands.add_parser(
        "estimate", help="Estimate a transition matrix from annotations")
    estimate.add_argument("--annotations", required=True)
    estimate.add_argument("--delta", type=int, required=True)
    estimate.add_argument("--config", help="pyramid YAML file")
    estimate.add_argument("--counts", action="store_true",
                          help="write raw counts instead of probabilities")
    estimate.add_argument("--out", required=True)
    estimate.set_defaults(func=cmd_estimate)

    thresh = commands.add_parser(
        "threshold", help="Binarize a transition matrix")
    thresh.add_argument("--matrix", required=True)
    thresh.add_argument("--tau", type=float, default=DEFAULT_TAU)
    thresh.add_argument("--augment", action="append",
                        choices=sorted(AUGMENTATIONS),
                        help="applied in the given order, repeatable")
    thresh.add_argument("--out", required=True)
    thresh.set_defaults(func=cmd_threshold)

    propose = commands.add_parser(
        "propose", help="Enumerate anchor micro-tube proposals")
    propose.add_argument("--bin", required=True)
    propose.add_argument("--config", help="pyramid YAML file")
    propose.add_argument("--out", required=True)
    propose.set_defaults(func=cmd_propose)

    synth = commands.add_parser("synth", help="Synthetic data")
    synth_commands = synth.add_subparsers(dest="synth_command")
    synth_commands.required = True

    gen = synth_commands.add_parser("gen", help="Generate annotations")
    gen.add_argument("--spec", help="motion spec YAML file")
    gen.add_argument("--kind", default="static", choices=KINDS)
    gen.add_argument("--velocity", type=_pair, default=(0.0, 0.0))
    gen.add_argument("--box-size", type=_pair, default=(0.1, 0.3))
    gen.add_argument("--label", type=int, default=1)
    gen.add_argument("--duration", type=_int_pair, default=(10, 30))
    gen.add_argument("--n-frames", type=int, default=40)
    gen.add_argument("--delta", type=int, default=1)
    gen.add_argument("--sparsity", type=int, default=1)
    gen.add_argument("--tubes-per-video", type=int, default=1)
    gen.add_argument("--step-sigma", type=float, default=0.01)
    gen.add_argument("--n-videos", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_synth_gen)

    transform = synth_commands.add_parser(
        "transform", help="Pad annotations onto a larger canvas")
    transform.add_argument("--annotations", required=True)
    transform.add_argument("--max-pad-x", type=int, default=MAX_PAD_X)
    transform.add_argument("--max-pad-y", type=int, default=MAX_PAD_Y)
    transform.add_argument("--image-w", type=int, default=IMAGE_W)
    transform.add_argument("--image-h", type=int, default=IMAGE_H)
    transform.add_argument("--seed", type=int, required=True)
    transform.add_argument("--out", required=True)
    transform.set_defaults(func=cmd_synth_transform)

    detect = synth_commands.add_parser(
        "detect", help="Simulate detector output")
    detect.add_argument("--annotations", required=True)
    detect.add_argument("--config", help="pyramid YAML file")
    detect.add_argument("--bin", help="binary transitions for distractors")
    detect.add_argument("--proposals",
                        help="proposal file from propose, for distractors")
    detect.add_argument("--jitter", type=float, default=0.0,
                        help="box coordinate noise, in box widths and heights")
    detect.add_argument("--true-score", type=float, default=1.0)
    detect.add_argument("--distractor-rate", type=float, default=0.0)
    detect.add_argument("--miss-rate", type=float, default=0.0)
    detect.add_argument("--delta", type=int, default=1)
    detect.add_argument("--num-classes", type=int)
    detect.add_argument("--stream", default="rgb")
    detect.add_argument("--seed", type=int, required=True)
    detect.add_argument("--out", required=True)
    detect.set_defaults(func=cmd_synth_detect)

    link = commands.add_parser("link", help="Link detections into paths")
    link.add_argument("--dets", required=True)
    link.add_argument("--params", help="link parameter YAML file")
    link.add_argument("--iou-weight", type=float)
    link.add_argument("--score-floor", type=float)
    link.add_argument("--max-misses", type=int)
    link.add_argument("--nms-threshold", type=float)
    link.add_argument("--top-n", type=int)
    link.add_argument("--out", required=True)
    link.set_defaults(func=cmd_link)

    trim = commands.add_parser("trim", help="Temporally trim paths")
    trim.add_argument("--paths", required=True)
    trim.add_argument("--alpha", type=float, default=0.5)
    trim.add_argument("--out", required=True)
    trim.set_defaults(func=cmd_trim)

    evaluate = commands.add_parser("eval", help="Video mAP of paths")
    evaluate.add_argument("--paths", required=True)
    evaluate.add_argument("--gt", required=True)
    evaluate.add_argument("--deltas", type=_float_list)
    evaluate.add_argument("--avg", action="store_true",
                          help="also report avg-mAP over 0.5:0.05:0.95")
    evaluate.add_argument("--trimmed-protocol", action="store_true",
                          help="clip paths to the ground truth span")
    evaluate.add_argument("--report", required=True)
    evaluate.set_defaults(func=cmd_eval)

    fuse = commands.add_parser("fuse", help="Mean fuse two streams")
    fuse.add_argument("--a", required=True)
    fuse.add_argument("--b", required=True)
    fuse.add_argument("--stream", default="fused")
    fuse.add_argument("--out", required=True)
    fuse.set_defaults(func=cmd_fuse)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level, stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        args.func(args)
    except (AmtubeError, OSError, yaml.YAMLError) as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__,
                                     "message": str(e)}) + "\n")
        return 2
    return 0
