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
Transitions learnt on a dataset before and after padding every video onto a
larger canvas, at a random offset per video.
"""
from amtube.app import App
from amtube.config import Config
from amtube.executors.local_executor import LocalExecutor
from amtube.executors.spark_executor import SparkExecutor  # noqa: F401
from amtube.synth.generator import generate_dataset
from amtube.synth.motion_spec import MotionSpec
from amtube.synth.transform import transform_annotations
from amtube.transitions.transition_matrix import (cardinality,
                                                  hypothesis_space, normalize,
                                                  threshold)

executor = LocalExecutor("transformed")
# executor = SparkExecutor("local[4]", "transformed", 8)

app = App(Config(executor=executor, num_partitions=8))

specs = MotionSpec.from_yaml("motion.yaml")
original = generate_dataset(specs, 200, seed=0)
transformed = transform_annotations(original, seed=0)

for name, annotations in [("original", original),
                          ("transformed", transformed)]:
    for delta in (1, 5, 10, 20):
        counts = app.estimate_transitions(annotations, delta)
        binary = threshold(normalize(counts), 0.10)
        per_level, total = cardinality(binary)
        kept, dense = hypothesis_space(binary, app.anchors)
        print("%-11s delta=%2d  M=%6d  off-diagonal=%s  hypotheses %d / %d"
              % (name, delta, total, binary.offdiagonal_count(), kept, dense))
