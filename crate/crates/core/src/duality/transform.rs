use crate::error::{Error, Result};
use crate::exact::{QMatrix, QVector};

/// M with rows u₁..u_d, so (Mx)ᵢ = uᵢ·x: every hyperplane orthogonal to uᵢ
/// is mapped onto one of the form wᵢ = const.
pub fn basis_change(us: &[QVector]) -> Result<QMatrix> {
    let d = us.len();
    for u in us {
        if u.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: u.dim(),
            });
        }
    }
    let m = QMatrix::from_rows(us.to_vec())?;
    if m.rank() != d {
        return Err(Error::DependentVectors);
    }
    Ok(m)
}
