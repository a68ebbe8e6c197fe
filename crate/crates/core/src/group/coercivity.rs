use super::{GroupElement, GroupError, SymmetryGroup};
use crate::linalg::{Matrix, RANK_TOL};

/// The `2n × 2n` real matrix of the spatial action of `g` on
/// configurations `(x_1, y_1, .., x_n, y_n)`: `(g·z)_i = A z_{σ⁻¹(i)}`.
fn action_matrix(g: &GroupElement) -> Matrix {
    let n = g.n();
    let theta = core::f64::consts::TAU * g.rot.to_f64();
    let (c, s) = (libm::cos(theta), libm::sin(theta));
    let a = if g.refl { [[c, s], [s, -c]] } else { [[c, -s], [s, c]] };
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        let i = g.perm.apply(j);
        for (r, row) in a.iter().enumerate() {
            for (col, v) in row.iter().enumerate() {
                m[(2 * i + r, 2 * j + col)] = *v;
            }
        }
    }
    m
}

/// Dimension of the subspace of centered configurations fixed by every
/// element of `elements`, with `n` particles.
pub fn fixed_dimension(n: usize, elements: &[GroupElement]) -> Result<usize, GroupError> {
    if let Some(g) = elements.iter().find(|g| g.n() != n) {
        return Err(GroupError::MismatchedN { left: n, right: g.n() });
    }
    let mut stacked = Matrix::zeros(2, 2 * n);
    for j in 0..n {
        stacked[(0, 2 * j)] = 1.0;
        stacked[(1, 2 * j + 1)] = 1.0;
    }
    let id = Matrix::identity(2 * n);
    for g in elements {
        let mut m = action_matrix(g);
        for (x, y) in m.data.iter_mut().zip(&id.data) {
            *x -= y;
        }
        stacked.stack(&m);
    }
    Ok(2 * n - stacked.rank(RANK_TOL))
}

/// Whether the only centered configuration fixed by the group is the zero
/// configuration.
pub fn coercivity_check(group: &SymmetryGroup) -> Result<bool, GroupError> {
    Ok(fixed_dimension(group.n(), group.elements()?)? == 0)
}
