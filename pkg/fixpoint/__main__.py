# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

import sys

from fixpoint.cli import main

if __name__ == "__main__":
    sys.exit(main())
