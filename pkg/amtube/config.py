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
from amtube.anchors.pyramid_config import PyramidConfig
from amtube.executors.local_executor import LocalExecutor
from amtube.linking.linker import LinkParams


class Config:
    """
    Configuration of an amtube App.

    Parameters
    ----------
        executor: Executor, optional
            Where the per video work runs. In-process when omitted
        num_partitions: Int, optional
            Number of shards the ground truth is split into for estimation
        pyramid_config: PyramidConfig, optional
            Anchor geometry, SSD300 defaults when omitted
        link_params: LinkParams, optional
            Linker settings, defaults when omitted
    """

    def __init__(self,
                 executor=None,
                 num_partitions=10,
                 pyramid_config=None,
                 link_params=None):
        self.executor = executor if executor is not None else LocalExecutor()
        self.num_partitions = num_partitions
        self.pyramid_config = pyramid_config or PyramidConfig()
        self.link_params = link_params or LinkParams()
