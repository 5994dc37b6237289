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
from amtube.transitions.augmentation import (AUGMENTATIONS, augment_diagonal,
                                             augment_neighbors,
                                             augment_relative_offsets)
from amtube.transitions.transition_counts import (TransitionCounts,
                                                  best_anchor_pair, estimate,
                                                  offdiagonal_by_class)
from amtube.transitions.transition_matrix import (DEFAULT_TAU,
                                                  BinaryTransitions,
                                                  TransitionMatrix,
                                                  cardinality,
                                                  hypothesis_space, normalize,
                                                  threshold)

__all__ = ["AUGMENTATIONS", "BinaryTransitions", "DEFAULT_TAU",
           "TransitionCounts", "TransitionMatrix", "augment_diagonal",
           "augment_neighbors", "augment_relative_offsets",
           "best_anchor_pair", "cardinality", "estimate", "hypothesis_space",
           "normalize", "offdiagonal_by_class", "threshold"]
