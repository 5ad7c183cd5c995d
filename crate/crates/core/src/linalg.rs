//! Exact linear algebra over the coefficient ring, which is an integral
//! domain, so elimination is done fraction-free.

use crate::error::{Error, Result};
use crate::exactalg::ParamScalar;

pub type Matrix = Vec<Vec<ParamScalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| ParamScalar::int(i64::from(i == j))).collect()).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![ParamScalar::zero(); cols]; a.len()];
    for (i, row) in a.iter().enumerate() {
        if row.len() != inner {
            return Err(Error::DimensionMismatch { expected: inner, found: row.len() });
        }
        for j in 0..cols {
            let mut acc = ParamScalar::zero();
            for k in 0..inner {
                acc = acc.try_add(&row[k].try_mul(&b[k][j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// Determinant by cofactor expansion; matrices here are at most 4x4.
pub fn det(m: &Matrix) -> Result<ParamScalar> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    match n {
        0 => Ok(ParamScalar::one()),
        1 => Ok(m[0][0].clone()),
        _ => {
            let mut acc = ParamScalar::zero();
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = entry.try_mul(&det(&minor)?)?;
                acc = if j % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
            }
            Ok(acc)
        }
    }
}

/// Inverse via the adjugate; the determinant must be a unit of the ring.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let d = det(m)?;
    if d.is_zero() {
        return Err(Error::SingularFrameChange);
    }
    let d_inv = d.inverse().map_err(|_| Error::NonUnitDeterminant(d.to_string()))?;
    let mut out = vec![vec![ParamScalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Matrix = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, v)| v.clone()).collect())
                .collect();
            let cof = det(&minor)?;
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            out[i][j] = signed.try_mul(&d_inv)?;
        }
    }
    Ok(out)
}

/// Rank of a list of vectors by fraction-free elimination.
pub fn rank(vectors: &[Vec<ParamScalar>]) -> Result<usize> {
    let mut rows: Vec<Vec<ParamScalar>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        let pivot = pivot_row[col].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for k in col..cols {
                row[k] = pivot.try_mul(&row[k])?.try_sub(&f.try_mul(&pivot_row[k])?)?;
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Indices of a maximal linearly independent subset, chosen greedily.
pub fn independent_subset(vectors: &[Vec<ParamScalar>]) -> Result<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..vectors.len() {
        let mut trial: Vec<Vec<ParamScalar>> = chosen.iter().map(|&k| vectors[k].clone()).collect();
        trial.push(vectors[i].clone());
        if rank(&trial)? == trial.len() {
            chosen.push(i);
        }
    }
    Ok(chosen)
}

/// Exact quotient `num / den`, defined when `den` is a unit or `num` is a
/// rational multiple of `den`.
pub fn exact_div(num: &ParamScalar, den: &ParamScalar) -> Result<ParamScalar> {
    if den.is_zero() {
        return Err(Error::Alg(crate::exactalg::AlgError::DivisionByZero));
    }
    if let Some(q) = num.rational_multiple_of(den) {
        return Ok(ParamScalar::from_rational(q));
    }
    num.try_div(den).map_err(|_| Error::NonUnitDenominator(den.to_string()))
}

/// Coordinates of `target` in the span of independent `basis` vectors, if it
/// lies in that span.
pub fn coordinates(basis: &[Vec<ParamScalar>], target: &[ParamScalar]) -> Result<Option<Vec<ParamScalar>>> {
    let k = basis.len();
    if k == 0 {
        return Ok(target.iter().all(ParamScalar::is_zero).then(Vec::new));
    }
    let len = target.len();
    // Columns of the system are the basis vectors; pick k rows with a nonzero minor.
    let rows_of = |r: usize| -> Vec<ParamScalar> { basis.iter().map(|b| b[r].clone()).collect() };
    let all_rows: Vec<Vec<ParamScalar>> = (0..len).map(rows_of).collect();
    let picked = independent_subset(&all_rows)?;
    if picked.len() < k {
        return Err(Error::Invalid("basis vectors are linearly dependent".into()));
    }
    let picked = &picked[..k];
    let system: Matrix = picked.iter().map(|&r| all_rows[r].clone()).collect();
    let d = det(&system)?;
    let mut coords = Vec::with_capacity(k);
    for j in 0..k {
        let replaced: Matrix = picked
            .iter()
            .zip(&system)
            .map(|(&r, row)| {
                let mut row = row.clone();
                row[j] = target[r].clone();
                row
            })
            .collect();
        coords.push(exact_div(&det(&replaced)?, &d)?);
    }
    for r in 0..len {
        let mut acc = ParamScalar::zero();
        for (c, b) in coords.iter().zip(basis) {
            acc = acc.try_add(&c.try_mul(&b[r])?)?;
        }
        if acc != target[r] {
            return Ok(None);
        }
    }
    Ok(Some(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;

    fn m(rows: &[&[&str]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|t| parse(t).unwrap()).collect()).collect()
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "1"]]);
        assert_eq!(det(&a).unwrap(), ParamScalar::int(-1));
        assert_eq!(mat_mul(&a, &inverse(&a).unwrap()).unwrap(), identity(3));
        let s = m(&[&["c", "1"], &["0", "1"]]);
        assert!(matches!(inverse(&s), Err(Error::NonUnitDeterminant(_))));
        let z = m(&[&["1", "2"], &["2", "4"]]);
        assert_eq!(inverse(&z), Err(Error::SingularFrameChange));
    }

    #[test]
    fn symbolic_rank() {
        let v = m(&[&["c+3", "0", "1"], &["2*c+6", "0", "2"], &["0", "r", "0"]]);
        assert_eq!(rank(&v).unwrap(), 2);
        assert_eq!(independent_subset(&v).unwrap(), vec![0, 2]);
    }

    #[test]
    fn solves_in_span() {
        let basis = m(&[&["1", "0", "r"], &["0", "2", "0"]]);
        let target: Vec<ParamScalar> = ["3", "4", "3*r"].iter().map(|t| parse(t).unwrap()).collect();
        let coords = coordinates(&basis, &target).unwrap().unwrap();
        assert_eq!(coords, vec![ParamScalar::int(3), ParamScalar::int(2)]);
        let off: Vec<ParamScalar> = ["3", "4", "r"].iter().map(|t| parse(t).unwrap()).collect();
        assert_eq!(coordinates(&basis, &off).unwrap(), None);
    }
}
