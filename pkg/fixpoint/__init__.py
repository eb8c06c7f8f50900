# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

__version__ = "0.1.0"

################################################################################
# Import most common subpackages
################################################################################

from . import kernel, shell, theorems
