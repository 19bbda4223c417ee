"""Minimal SVG scatter plots for node sets and the generating curve."""

from __future__ import annotations

import numpy as np

__all__ = ["nodes_svg"]

_SIZE = 480
_PAD = 30


def _map(v: np.ndarray, half: float) -> np.ndarray:
    inner = (_SIZE - 2 * _PAD) / 2.0
    return _PAD + inner * (1.0 + v / half)


def nodes_svg(points: np.ndarray, curve: np.ndarray | None = None, title: str = "") -> str:
    """Standalone SVG: unit-square frame, node markers, optional curve."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    half = max(1.0, float(np.abs(pts).max()) if len(pts) else 1.0)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    lo, hi = _map(np.array(-1.0), half), _map(np.array(1.0), half)
    side = hi - lo
    parts.append(
        f'<rect x="{lo:.2f}" y="{lo:.2f}" width="{side:.2f}" height="{side:.2f}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    if curve is not None and len(curve):
        cx = _map(curve[:, 0], half)
        cy = _map(-curve[:, 1], half)
        path = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(cx, cy))
        parts.append(f'<polyline points="{path}" fill="none" stroke="#4477aa" stroke-width="0.7"/>')
    xs = _map(pts[:, 0], half)
    ys = _map(-pts[:, 1], half)
    for a, b in zip(xs, ys):
        parts.append(f'<circle cx="{a:.3f}" cy="{b:.3f}" r="3" fill="#cc3311"/>')
    parts.append("</svg>")
    return "\n".join(parts)
