#!/usr/bin/env python3
"""Write the particle-action graph as DOT: configurations with a fixed
particle number as nodes, generator moves as labelled edges.

Usage: python scripts/export_action_graph.py [N] [particles] > graph.dot
"""
from __future__ import annotations

import sys

from partic.cli import main as cli_main


def main(argv: list[str]) -> int:
    n = argv[0] if argv else "4"
    particles = argv[1] if len(argv) > 1 else "2"
    return cli_main(["act", "--N", n, "--dot", "--particles", particles])


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
