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
from pyspark.accumulators import AccumulatorParam


class TransitionCountsAccumulator(AccumulatorParam):
    """
    Merges partial TransitionCounts produced by estimation shards. Counts are
    integers, so the merged value does not depend on the order in which the
    shards report.
    """
    def __init__(self, app):
        self.accumulator = app.executor.register_accumulator(None, self)

    @property
    def value(self):
        return self.accumulator.value

    def __getstate__(self):
        # workers only need the merge rule, not the driver side handle
        state = dict(self.__dict__)
        state.pop("accumulator", None)
        return state

    def zero(self, value):
        """
        Implements method from AccumulatorParam. Just used to initialize
        the accumulator
        :param value: initial value for the accumulator
        :return: same
        """
        return value

    def addInPlace(self, val1, val2):
        """
        The first shard to report replaces the empty initial value; later
        shards are merged by elementwise addition
        :param val1: counts accumulated so far, or None
        :param val2: counts from one shard
        :return: merged counts
        """
        if val1 is None:
            return val2
        if val2 is None:
            return val1
        return val1.merge(val2)
