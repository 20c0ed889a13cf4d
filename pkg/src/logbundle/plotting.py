"""Static SVG rendering of an arrangement in the affine chart z = 1.

Output bytes are deterministic for a fixed input: fixed hash salt, no
date metadata, text kept as text rather than font paths.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .geometry import Arrangement  # noqa: E402

_RC = {
    "svg.hashsalt": "logbundle",
    "svg.fonttype": "none",
    "path.simplify": False,
    "figure.figsize": (6.0, 6.0),
    "font.family": "sans-serif",
}


def _segment_in_box(coeffs, box: Fraction):
    """Endpoints of the affine line u0 x + u1 y + u2 = 0 clipped to the box."""
    u0, u1, u2 = (Fraction(c) for c in coeffs)
    pts = []
    if u1:
        for x in (-box, box):
            y = -(u2 + u0 * x) / u1
            if -box <= y <= box:
                pts.append((x, y))
    if u0:
        for y in (-box, box):
            x = -(u2 + u1 * y) / u0
            if -box <= x <= box:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def render_arrangement(arr: Arrangement, report: dict, out_path, box=Fraction(5)):
    """Draw the arrangement with jumping lines and point highlighted."""
    box = Fraction(box)
    if box <= 0:
        raise ValueError("box must be positive")
    rows = [r for r in report["lines"] if r["tag"] == "arrangement"]
    if len(rows) != len(arr):
        raise ValueError("report does not match the arrangement")

    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        at_infinity = 0
        drawn = 0
        for L, row in zip(arr, rows):
            coeffs = L.coeffs
            if coeffs[0] == 0 and coeffs[1] == 0:
                at_infinity += 1
                continue
            seg = _segment_in_box(coeffs, box)
            if seg is None:
                continue
            (x0, y0), (x1, y1) = seg
            is_jump = row["jumping"]
            ax.plot(
                [float(x0), float(x1)], [float(y0), float(y1)],
                color="crimson" if is_jump else "steelblue",
                linewidth=2.0 if is_jump else 1.1,
                zorder=3 if is_jump else 2,
            )
            drawn += 1

        cls = report["class"]
        point = cls.get("jumping_point")
        if point is not None:
            coords = [Fraction(c) for c in point]
            if coords[2] != 0:
                px = coords[0] / coords[2]
                py = coords[1] / coords[2]
                if -box <= px <= box and -box <= py <= box:
                    ax.plot([float(px)], [float(py)], marker="o", color="black",
                            markersize=6, zorder=4)
                    label = "P = (" + ":".join(point) + ")"
                    ax.annotate(label, (float(px), float(py)),
                                textcoords="offset points", xytext=(6, 6))

        notes = []
        if at_infinity:
            notes.append(f"{at_infinity} line(s) at infinity")
        if drawn == 0:
            notes.append("no lines intersect the view box")
        title = cls["kind"]
        if cls["a"] is not None:
            title += f"({cls['a']},{cls['b']})"
        ax.set_title(title)
        if notes:
            ax.set_xlabel("; ".join(notes))
        ax.set_xlim(float(-box), float(box))
        ax.set_ylim(float(-box), float(box))
        ax.set_aspect("equal")
        fig.savefig(out_path, format="svg", metadata={"Date": None})
        plt.close(fig)
