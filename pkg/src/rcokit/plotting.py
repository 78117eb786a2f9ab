"""Matplotlib figures for analysis and verdict reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from mpl_toolkits.mplot3d.art3d import Poly3DCollection  # noqa: E402

from .polymodel import Polyhedron  # noqa: E402

FACE_COLORS = {3: "#d9a441", 4: "#4f7cac", 5: "#7a9e7e", 6: "#b05f6d"}


def draw_polyhedron(ax, p: Polyhedron, highlight: set[int] | None = None, title: str = ""):
    coords = np.array([v.to_floats() for v in p.vertices])
    polys = [coords[list(f)] for f in p.faces]
    colors = [FACE_COLORS.get(len(f), "#999999") for f in p.faces]
    coll = Poly3DCollection(polys, facecolors=colors, edgecolors="k", linewidths=0.6, alpha=0.85)
    ax.add_collection3d(coll)
    if highlight:
        pts = coords[sorted(highlight)]
        ax.scatter(pts[:, 0], pts[:, 1], pts[:, 2], color="crimson", s=14, depthshade=False)
    r = np.abs(coords).max() * 1.05
    ax.set_xlim(-r, r)
    ax.set_ylim(-r, r)
    ax.set_zlim(-r, r)
    ax.set_box_aspect((1, 1, 1))
    ax.set_axis_off()
    ax.view_init(elev=22, azim=30)
    if title:
        ax.set_title(title, fontsize=11)
    return ax


def render_solid(p: Polyhedron, path, title: str = "") -> Path:
    fig = plt.figure(figsize=(5, 5))
    ax = fig.add_subplot(projection="3d")
    draw_polyhedron(ax, p, title=title)
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def render_contrast(result: dict, directory) -> list[Path]:
    """Write the side-by-side solids and the orbit-structure chart; return the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    solids = result["solids"]
    facts = result["facts"]

    fig = plt.figure(figsize=(10, 5))
    for k, (key, name) in enumerate((("rco", "RCO"), ("pseudo", "Pseudo-RCO"))):
        ax = fig.add_subplot(1, 2, k + 1, projection="3d")
        draw_polyhedron(ax, solids[key], title=f"{name}: symmetry order {facts[key]['order']}")
    solids_path = directory / "solids.png"
    fig.savefig(solids_path, dpi=120, bbox_inches="tight")
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(6, 3.5))
    labels = ["RCO", "Pseudo-RCO"]
    bottoms = np.zeros(2)
    orbit_lists = [facts["rco"]["vertex_orbits"], facts["pseudo"]["vertex_orbits"]]
    depth = max(len(o) for o in orbit_lists)
    for level in range(depth):
        sizes = np.array([o[level] if level < len(o) else 0 for o in orbit_lists], dtype=float)
        ax.bar(labels, sizes, bottom=bottoms, edgecolor="k", color=plt.cm.Blues(0.35 + 0.3 * level))
        for x, (s, b) in enumerate(zip(sizes, bottoms)):
            if s:
                ax.text(x, b + s / 2, f"{int(s)}", ha="center", va="center")
        bottoms += sizes
    ax.set_ylabel("vertices")
    ax.set_title("vertex orbits under the symmetry group")
    orbits_path = directory / "vertex_orbits.png"
    fig.savefig(orbits_path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return [solids_path, orbits_path]
