"""Run the whole law suite over a few hundred random posets.

This is the same work as ``nongenerators sweep``; it prints how many posets
were checked per generator and whether any law failed.
"""

import sys

from nongenerators import cli

for generator in ("random_poset", "random_join_semilattice", "random_moore_family", "zorn_gadget"):
    code = cli.main(["sweep", generator, "--count", "100", "--seed", "7", "--format", "text"])
    if code:
        sys.exit(code)
