"""CSV and SVG emission for sweep results.

Numbers are written with Python's shortest round-trip repr so that a
rerun of the same sweep is byte-identical.  The SVG is a bare polyline
chart: one polyline per curve on linear axes, nothing configurable.
"""

import json
from pathlib import Path

from .sweeps import CSV_COLUMNS, SweepResult

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#17becf", "#7f7f7f")


def _fmt(x) -> str:
    if isinstance(x, float):
        if x == 0.0:
            return "0.0"  # normalize -0.0
        return repr(x)
    if x is None:
        return ""
    return str(x)


def _results(result) -> list:
    return [result] if isinstance(result, SweepResult) else list(result)


def emit_csv(result, path) -> None:
    """Write one or more sweep results to a single CSV (exact schema header
    first); the meta blocks go to a companion <path>.meta.json."""
    results = _results(result)
    path = Path(path)
    lines = [",".join(CSV_COLUMNS)]
    for res in results:
        for row in res.rows:
            lines.append(",".join(_fmt(row[col]) for col in CSV_COLUMNS))
    try:
        path.write_text("\n".join(lines) + "\n")
        meta_path = path.with_name(path.name + ".meta.json")
        meta_path.write_text(json.dumps([r.meta for r in results],
                                        indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        raise OSError(f"failed writing {path}: {exc}") from exc


def emit_svg(result, path, y_column: str = "negativity",
             width: int = 640, height: int = 480) -> None:
    """Polyline chart of y_column against the grid value, one curve per
    sweep result."""
    results = _results(result)
    path = Path(path)
    margin = 60
    xs = [row["grid_value"] for res in results for row in res.rows]
    ys = [row[y_column] for res in results for row in res.rows]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0

    def px(x):
        return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def py(y):
        return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    x_label = results[0].rows[0]["grid_param"] if results and results[0].rows else "x"
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<text x="{width // 2}" y="{height - margin // 4}" '
        f'text-anchor="middle" font-size="14">{x_label}</text>',
        f'<text x="{margin // 4}" y="{height // 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 {margin // 4} {height // 2})">{y_column}</text>',
        f'<text x="{margin}" y="{height - margin + 16}" font-size="11">{_fmt(float(x_lo))}</text>',
        f'<text x="{width - margin}" y="{height - margin + 16}" text-anchor="end" '
        f'font-size="11">{_fmt(float(x_hi))}</text>',
        f'<text x="{margin - 4}" y="{height - margin}" text-anchor="end" '
        f'font-size="11">{_fmt(float(y_lo))}</text>',
        f'<text x="{margin - 4}" y="{margin}" text-anchor="end" '
        f'font-size="11">{_fmt(float(y_hi))}</text>',
    ]
    for k, res in enumerate(results):
        pts = " ".join(f"{px(row['grid_value']):.2f},{py(row[y_column]):.2f}"
                       for row in res.rows)
        color = _PALETTE[k % len(_PALETTE)]
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        label = res.meta.get("label")
        if label:
            parts.append(f'<text x="{width - margin + 4}" y="{margin + 16 * k}" '
                         f'font-size="11" fill="{color}">{label}</text>')
    parts.append("</svg>")
    try:
        path.write_text("\n".join(parts) + "\n")
    except OSError as exc:
        raise OSError(f"failed writing {path}: {exc}") from exc
