"""Exact linear algebra over F_p and Q, at desk scale.

Matrices are lists of rows; entries are ints (reduced mod p when the
characteristic is a prime) or Fractions (characteristic 0).  Everything is
plain Gaussian elimination; the complexes in this package are tiny.
"""

from __future__ import annotations

from fractions import Fraction


def _coerce(matrix, char):
    if char:
        return [[x % char for x in row] for row in matrix]
    return [[Fraction(x) for x in row] for row in matrix]


def _eliminate(rows, char, ncols):
    """Row-reduce in place; returns the list of pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][c], char - 2, char) if char else Fraction(1) / rows[r][c]
        rows[r] = [(x * inv % char) if char else x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                if char:
                    rows[i] = [(a - factor * b) % char for a, b in zip(rows[i], rows[r])]
                else:
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(matrix, char=0):
    if not matrix or not matrix[0]:
        return 0
    rows = _coerce(matrix, char)
    return len(_eliminate(rows, char, len(rows[0])))


def nullspace(matrix, char=0, ncols=None):
    """Basis of the right kernel, as vectors of length ncols."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if ncols == 0:
        return []
    if not matrix:
        matrix = [[0] * ncols]
    rows = _coerce(matrix, char)
    pivots = _eliminate(rows, char, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r_index, c in enumerate(pivots):
            value = -rows[r_index][f]
            vec[c] = value % char if char else value
        basis.append(vec)
    return basis


class ChainComplexData:
    """A finite chain complex presented by dimensions and boundary matrices.

    boundaries[d] is the matrix of the differential C_d -> C_{d-1}:
    boundaries[d][i][j] = coefficient of the i-th basis element of C_{d-1}
    in the boundary of the j-th basis element of C_d.
    """

    def __init__(self, dims, boundaries):
        self.dims = list(dims)
        self.boundaries = dict(boundaries)

    def boundary_matrix(self, d):
        rows = self.dims[d - 1] if 1 <= d <= len(self.dims) - 1 else 0
        cols = self.dims[d] if 0 <= d < len(self.dims) else 0
        mat = self.boundaries.get(d)
        if mat is None:
            mat = [[0] * cols for _ in range(rows)]
        return mat

    def betti(self, char=0):
        out = []
        for d in range(len(self.dims)):
            rk_in = rank(self.boundary_matrix(d + 1), char) if d + 1 < len(self.dims) else 0
            rk_out = rank(self.boundary_matrix(d), char) if d >= 1 else 0
            out.append(self.dims[d] - rk_in - rk_out)
        return tuple(out)


def matrix_of_map(images, target_index, target_size, char=0):
    """Column matrix of a linear map given the images of the source basis.

    `images` is a list of dicts basis->coeff; `target_index` maps a target
    basis element to its row index.
    """
    mat = [[0] * len(images) for _ in range(target_size)]
    for j, image in enumerate(images):
        for basis, coeff in image.items():
            value = coeff % char if char else coeff
            mat[target_index[basis]][j] = value
    return mat


def induced_homology_rank(source, target, chain_map, d, char=0):
    """Rank of the map induced on degree-d homology by a chain map.

    `chain_map[d]` is the matrix of the degree-d component.  The rank is
    computed as rank(boundaries_target + image of source cycles) minus
    rank(boundaries_target).
    """
    cycles = nullspace(source.boundary_matrix(d), char, ncols=source.dims[d])
    f = chain_map[d]
    target_dim = target.dims[d]
    image_cols = []
    for z in cycles:
        col = [0] * target_dim
        for i in range(target_dim):
            acc = sum(f[i][j] * z[j] for j in range(len(z)))
            col[i] = acc % char if char else acc
        image_cols.append(col)
    boundary_cols = []
    b = target.boundary_matrix(d + 1) if d + 1 < len(target.dims) else []
    if b and b[0:]:
        for j in range(len(b[0]) if b else 0):
            boundary_cols.append([b[i][j] for i in range(target_dim)])
    all_rows = [list(col) for col in boundary_cols + image_cols]
    boundary_rows = [list(col) for col in boundary_cols]
    return rank(all_rows, char) - rank(boundary_rows, char)
