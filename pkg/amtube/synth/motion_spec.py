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
import math

import yaml

from amtube.exceptions import ValidationError

KINDS = ("static", "linear_drift", "random_walk")


class MotionSpec:
    """
    How the actors of a synthetic dataset move. Coordinates are fractions of
    the unit square image.

    Parameters
    ----------
        kind: str
            static, linear_drift or random_walk
        velocity: (float, float)
            Mean center displacement per frame along x and y
        box_size: (float, float)
            Range the side lengths of a box are drawn from
        label: int
            Class id of every tube generated from this spec
        duration: (int, int)
            Inclusive range of the number of frames an instance lasts
        n_frames: int
            Frames per video
        delta: int
            Frame gap of the micro-tubes extracted from the videos
        sparsity: int
            Annotate every sparsity-th frame of an instance
        tubes_per_video: int
        step_sigma: float
            Standard deviation of the per frame random walk step
        allow_single_frame: bool
            Let instances be shorter than two annotated frames
    """
    fields = ["kind", "velocity", "box_size", "label", "duration",
              "n_frames", "delta", "sparsity", "tubes_per_video",
              "step_sigma", "allow_single_frame"]

    def __init__(self, kind="static", velocity=(0.0, 0.0),
                 box_size=(0.1, 0.3), label=1, duration=(10, 30),
                 n_frames=40, delta=1, sparsity=1, tubes_per_video=1,
                 step_sigma=0.01, allow_single_frame=False):
        self.kind = kind
        self.velocity = tuple(float(v) for v in velocity)
        self.box_size = tuple(float(s) for s in box_size)
        self.label = int(label)
        self.duration = tuple(int(d) for d in duration)
        self.n_frames = int(n_frames)
        self.delta = int(delta)
        self.sparsity = int(sparsity)
        self.tubes_per_video = int(tubes_per_video)
        self.step_sigma = float(step_sigma)
        self.allow_single_frame = bool(allow_single_frame)
        self.validate()

    def validate(self):
        if self.kind not in KINDS:
            raise ValidationError("Unknown motion kind %r, expected one of %s"
                                  % (self.kind, ", ".join(KINDS)))
        if len(self.velocity) != 2 or \
                not all(math.isfinite(v) for v in self.velocity):
            raise ValidationError("Velocity needs two finite components")
        low, high = self.box_size
        if not (0.0 < low <= high < 1.0):
            raise ValidationError(
                "Box sizes must satisfy 0 < min <= max < 1, got %s" %
                (self.box_size,))
        if self.label < 1:
            raise ValidationError("Class ids start at 1; 0 is background")
        shortest, longest = self.duration
        if not (1 <= shortest <= longest <= self.n_frames):
            raise ValidationError(
                "Durations %s must fit in %d frames" %
                (self.duration, self.n_frames))
        if self.delta < 1 or self.sparsity < 1 or self.tubes_per_video < 1:
            raise ValidationError(
                "delta, sparsity and tubes_per_video must be positive")
        if self.step_sigma < 0:
            raise ValidationError("step_sigma must not be negative")
        if not self.allow_single_frame and shortest < self.sparsity + 1:
            raise ValidationError(
                "Instances of %d frames annotated every %d frames would "
                "have a single keyframe" % (shortest, self.sparsity))

    @property
    def is_static(self):
        return self.kind == "static"

    def to_dict(self):
        values = {field: getattr(self, field) for field in self.fields}
        for field in ("velocity", "box_size", "duration"):
            values[field] = list(values[field])
        return values

    @classmethod
    def from_dict(cls, values):
        unknown = set(values) - set(cls.fields)
        if unknown:
            raise ValidationError(
                "Unknown motion spec keys: %s" % sorted(unknown))
        return cls(**values)

    @classmethod
    def from_yaml(cls, path):
        """
        A file holds one spec or a list of specs under ``specs``
        :return: list of MotionSpec
        """
        with open(path) as f:
            values = yaml.safe_load(f) or {}
        if isinstance(values, dict) and "specs" in values:
            return [cls.from_dict(v) for v in values["specs"]]
        return [cls.from_dict(values)]

    def __eq__(self, other):
        return isinstance(other, MotionSpec) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "MotionSpec(kind=%s, velocity=%s, label=%d)" % (
            self.kind, self.velocity, self.label)
