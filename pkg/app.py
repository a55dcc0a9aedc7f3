#!/usr/bin/env python3
"""Report browser entry point.

The library and command line tool live in the `chevcheck` package;
`python3 -m chevcheck --help` lists the subcommands.

Copyright (c) 2026, pushkin
Licensed under the BSD 3-Clause License. See LICENSE file for details.
"""

import sys

from chevcheck import ChevcheckTui

__all__ = ["ChevcheckTui"]


if __name__ == "__main__":
    ChevcheckTui(report_path=sys.argv[1] if len(sys.argv) > 1 else None).run()
