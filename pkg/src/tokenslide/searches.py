"""Built-in batch searches over small graph families.

Each search builds full slide graphs for a fixed family and tallies
planarity. Reports are deterministic: identical inputs give identical
JSON regardless of thread count, so wall time stays out of to_json.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .enumeration import enumerate_connected_graphs, enumerate_trees
from .errors import UnknownSearch
from .graph import cycle
from .io import write_graph6
from .props import is_planar
from .reconf import build_TS

SEARCH_NAMES = ("trees7", "trees8", "planar6", "cycles-planarity")


@dataclass(frozen=True)
class SearchReport:
    name: str
    verdicts: tuple
    summary: dict
    wall_time: float

    def to_json(self):
        return {
            "name": self.name,
            "verdicts": [dict(v) for v in self.verdicts],
            "summary": dict(self.summary),
        }


def _ts_planar_verdict(g):
    ts = build_TS(g)
    planar, _ = is_planar(ts)
    return {
        "graph6": write_graph6(g),
        "ts_nodes": ts.num_nodes(),
        "ts_edges": ts.num_edges(),
        "ts_planar": planar,
    }


def _map_verdicts(graphs, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(_ts_planar_verdict, graphs))
    return [_ts_planar_verdict(g) for g in graphs]


def run_search(name, threads=None):
    """Run one named search; the report is independent of thread count."""
    start = time.monotonic()
    if name == "trees7":
        verdicts = _map_verdicts(enumerate_trees(7), threads)
    elif name == "trees8":
        verdicts = _map_verdicts(enumerate_trees(8), threads)
    elif name == "planar6":
        graphs = [g for g in enumerate_connected_graphs(6) if is_planar(g)[0]]
        verdicts = _map_verdicts(graphs, threads)
    elif name == "cycles-planarity":
        verdicts = _map_verdicts([cycle(n) for n in range(3, 9)], threads)
        for v, n in zip(verdicts, range(3, 9)):
            v["n"] = n
    else:
        raise UnknownSearch(
            f"unknown search {name!r}; choices: {', '.join(SEARCH_NAMES)}")
    planar = sum(1 for v in verdicts if v["ts_planar"])
    summary = {"planar": planar, "nonplanar": len(verdicts) - planar}
    return SearchReport(name=name, verdicts=tuple(verdicts), summary=summary,
                        wall_time=time.monotonic() - start)
