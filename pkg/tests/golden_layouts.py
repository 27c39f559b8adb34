"""Golden block layouts for the two worked examples.

Each differential of the resolution is recorded as the list of styled
rectangles of its published block picture: (x0, y0, x1, y1, style) with x
the column coordinate and |y| the row coordinate (top row 0).  Unstyled
background rectangles are zero regions and are omitted; the expected
entry-level grid is painted from the styled rectangles over a zero
background.
"""

K1, K2, K3 = "koszul1", "koszul2", "koszul3"
Z1, Z2, Z3 = "zeta1", "zeta2", "zeta3"

# codepth 2: R = Q[x,y,z]/(x^2, y^2+z^2)
CODEPTH2_DF = {
    1: [(0, 0, 3, 1, K1)],
    2: [(0, 0, 3, 3, K2), (3, 0, 5, 3, Z1)],
    3: [
        (0, 0, 1, -3, K3),
        (1, 0, 7, -3, Z2),
        (1, -3, 4, -4, K1),
        (4, -4, 7, -5, K1),
    ],
    4: [
        (0, 0, 6, -1, Z3),
        (0, -1, 3, -4, K2),
        (3, -4, 6, -7, K2),
        (6, -1, 8, -4, Z1),
        (7, -4, 9, -7, Z1),
    ],
    5: [
        (0, 0, 1, -3, K3),
        (1, -3, 2, -6, K3),
        (2, 0, 8, -3, Z2),
        (5, -3, 11, -6, Z2),
        (2, -6, 5, -7, K1),
        (5, -7, 8, -8, K1),
        (8, -8, 11, -9, K1),
    ],
    6: [
        (0, 0, 6, -1, Z3),
        (3, -1, 9, -2, Z3),
        (0, -2, 3, -5, K2),
        (3, -5, 6, -8, K2),
        (6, -8, 9, -11, K2),
        (9, -2, 11, -5, Z1),
        (10, -5, 12, -8, Z1),
        (11, -8, 13, -11, Z1),
    ],
}

# codepth 3: R = Q[x,y,z]/(x^2+y^2, xz, z^2+xy)
CODEPTH3_DF = {
    1: [(0, 0, 3, 1, K1)],
    2: [(0, 0, 3, 3, K2), (3, 0, 6, 3, Z1)],
    3: [
        (0, 0, 1, -3, K3),
        (1, 0, 10, -3, Z2),
        (1, -3, 4, -4, K1),
        (4, -4, 7, -5, K1),
        (7, -5, 10, -6, K1),
    ],
    4: [
        (0, 0, 9, -1, Z3),
        (0, -1, 3, -4, K2),
        (3, -4, 6, -7, K2),
        (6, -7, 9, -10, K2),
        (9, -1, 12, -4, Z1),
        (10, -4, 11, -7, Z1),
        (12, -4, 14, -7, Z1),
        (11, -7, 12, -10, Z1),
        (13, -7, 15, -10, Z1),
    ],
    5: [
        (0, 0, 1, -3, K3),
        (1, -3, 2, -6, K3),
        (2, -6, 3, -9, K3),
        (3, 0, 12, -3, Z2),
        (6, -3, 9, -6, Z2),
        (12, -3, 18, -6, Z2),
        (9, -6, 12, -9, Z2),
        (15, -6, 21, -9, Z2),
        (3, -9, 6, -10, K1),
        (6, -10, 9, -11, K1),
        (9, -11, 12, -12, K1),
        (12, -12, 15, -13, K1),
        (15, -13, 18, -14, K1),
        (18, -14, 21, -15, K1),
    ],
    6: [
        (0, 0, 9, -1, Z3),
        (3, -1, 6, -2, Z3),
        (9, -1, 15, -2, Z3),
        (6, -2, 9, -3, Z3),
        (12, -2, 18, -3, Z3),
        (0, -3, 3, -6, K2),
        (3, -6, 6, -9, K2),
        (6, -9, 9, -12, K2),
        (9, -12, 12, -15, K2),
        (12, -15, 15, -18, K2),
        (15, -18, 18, -21, K2),
        (18, -3, 21, -6, Z1),
        (19, -6, 20, -9, Z1),
        (21, -6, 23, -9, Z1),
        (20, -9, 21, -12, Z1),
        (22, -9, 24, -12, Z1),
        (21, -12, 22, -15, Z1),
        (24, -12, 26, -15, Z1),
        (22, -15, 23, -18, Z1),
        (25, -15, 27, -18, Z1),
        (23, -18, 24, -21, Z1),
        (26, -18, 28, -21, Z1),
    ],
}


def golden_grid(rects, nrows, ncols):
    """Paint the styled rectangles over a zero background."""
    grid = [["zero"] * ncols for _ in range(nrows)]
    for x0, y0, x1, y1, style in rects:
        r0, r1 = sorted((abs(y0), abs(y1)))
        c0, c1 = sorted((x0, x1))
        for r in range(r0, r1):
            for c in range(c0, c1):
                grid[r][c] = style
    return grid


def layout_grid(layout):
    """Entry-level style grid of a rendered BlockLayout."""
    grid = [["zero"] * layout.ncols for _ in range(layout.nrows)]
    for b in layout.blocks:
        for r in range(b.row0, b.row0 + b.nrows):
            for c in range(b.col0, b.col0 + b.ncols):
                grid[r][c] = b.style
    return grid
