"""Figure and report rendering.

Renders cleaning traces to per-step PNG figures (clean vertices white,
dirty vertices black, cleaned arcs dashed -- the same convention as the
DOT export) and writes verification suites as a CSV plus a summary
figure.  matplotlib and networkx are imported lazily so the core library
works without a display stack.
"""

from __future__ import annotations

import csv
import os

from .engine import CleaningTrace
from .graphs import Digraph


def _layout(g: Digraph):
    import networkx as nx

    ng = nx.DiGraph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.arcs)
    # deterministic layout: fixed seed, fall back to a circle for tiny graphs
    if g.n <= 2:
        return nx.circular_layout(ng), ng
    return nx.spring_layout(ng, seed=7), ng


def render_trace(g: Digraph, trace: CleaningTrace, fig_dir: str) -> list[str]:
    """One PNG per trace step; returns the written paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import networkx as nx

    os.makedirs(fig_dir, exist_ok=True)
    pos, ng = _layout(g)
    written = []
    for step in trace.steps:
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        node_colors = [
            "white" if v in step.clean_vertices else "black" for v in range(g.n)
        ]
        font_colors = {
            v: ("black" if v in step.clean_vertices else "white")
            for v in range(g.n)
        }
        nx.draw_networkx_nodes(
            ng, pos, ax=ax, node_color=node_colors, edgecolors="black"
        )
        for v in range(g.n):
            label = str(v)
            if step.brushes[v]:
                label = f"{v}\n({step.brushes[v]})"
            ax.text(
                *pos[v],
                label,
                ha="center",
                va="center",
                fontsize=8,
                color=font_colors[v],
            )
        clean = [a for a in g.arcs if a in step.clean_arcs]
        dirty = [a for a in g.arcs if a not in step.clean_arcs]
        nx.draw_networkx_edges(ng, pos, edgelist=dirty, ax=ax, style="solid")
        nx.draw_networkx_edges(
            ng, pos, edgelist=clean, ax=ax, style="dashed", edge_color="gray"
        )
        ax.set_title(f"t = {step.t}")
        ax.set_axis_off()
        path = os.path.join(fig_dir, f"step_{step.t:03d}.png")
        fig.savefig(path, dpi=110, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written


def write_suite_report(rows: list[dict], report_dir: str) -> tuple[str, str]:
    """CSV of the suite rows plus a pass/fail summary figure."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(report_dir, exist_ok=True)
    csv_path = os.path.join(report_dir, "rows.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=["name", "expected", "computed", "ok"])
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {
                    "name": row["name"],
                    "expected": row["expected"],
                    "computed": row["computed"],
                    "ok": row["ok"],
                }
            )

    passed = sum(1 for r in rows if r["ok"])
    failed = len(rows) - passed
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(["pass", "fail"], [passed, failed], color=["#2a9d2a", "#c03030"])
    ax.set_ylabel("checks")
    ax.set_title(f"{passed}/{len(rows)} checks passed")
    fig_path = os.path.join(report_dir, "summary.png")
    fig.savefig(fig_path, dpi=110, bbox_inches="tight")
    plt.close(fig)
    return csv_path, fig_path
