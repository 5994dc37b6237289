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
import unittest
from unittest.mock import MagicMock

from amtube.anchors.pyramid_config import PyramidConfig
from amtube.config import Config
from amtube.executors.executor import Executor
from amtube.executors.local_executor import LocalExecutor
from amtube.linking.linker import LinkParams


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        config = Config()
        self.assertIsInstance(config.executor, LocalExecutor)
        self.assertEqual(config.num_partitions, 10)
        self.assertEqual(config.pyramid_config, PyramidConfig())
        self.assertEqual(config.link_params, LinkParams())

    def test_overrides(self):
        mock_executor = MagicMock(Executor)
        pyramid = PyramidConfig(grid_sizes=[5, 3], shapes_per_cell=[2, 1],
                                scales=[0.2, 0.4], aspect_ratios=[[1], [1]],
                                extra_square=[True, False])
        params = LinkParams(top_n=3)
        config = Config(executor=mock_executor, num_partitions=4,
                        pyramid_config=pyramid, link_params=params)
        self.assertEqual(config.executor, mock_executor)
        self.assertEqual(config.num_partitions, 4)
        self.assertEqual(config.pyramid_config, pyramid)
        self.assertEqual(config.link_params.top_n, 3)


if __name__ == '__main__':
    unittest.main()
