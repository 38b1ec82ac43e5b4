#!/usr/bin/env python3
"""
Writes a seeded random graph6 corpus for surveys, using the [generator]
section of cover_pairs.config.toml.
"""

import argparse
from pathlib import Path
from typing import Optional

from app.config import GeneratorConfig, get_config
from app.functions.corpus import random_graphs
from app.functions.graph_core import to_graph6
from app.ingest.transforms.logging_consumers import log_file_written, log_start


def generate_random(cfg: GeneratorConfig, output: Optional[Path] = None, connected: bool = True) -> Path:
    """
    Generate cfg.count graphs and write them one per line.

    Returns:
        The path written
    """
    path = output or Path(cfg.output)
    log_start(f"Generating {cfg.count} graphs on {cfg.min_n}..{cfg.max_n} vertices (seed {cfg.seed})")
    with open(path, "w") as f:
        for g in random_graphs(cfg.count, cfg.min_n, cfg.max_n, cfg.edge_percent, cfg.seed, connected=connected):
            f.write(to_graph6(g) + "\n")
    log_file_written(str(path), cfg.count)
    return path


def main():
    """Main entry point"""
    cfg = get_config().generator
    parser = argparse.ArgumentParser(description="Generate a random graph6 corpus")
    parser.add_argument("--count", type=int, default=cfg.count)
    parser.add_argument("--seed", type=int, default=cfg.seed)
    parser.add_argument("--output", type=Path, default=Path(cfg.output))
    parser.add_argument("--allow-disconnected", action="store_true", help="Keep disconnected draws")
    args = parser.parse_args()
    generate_random(cfg.model_copy(update={"count": args.count, "seed": args.seed}), args.output,
                    connected=not args.allow_disconnected)


if __name__ == "__main__":
    main()
