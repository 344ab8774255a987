//! Small exact linear algebra over the rationals.
//!
//! Everything here works on dense row vectors. The reduced row echelon form
//! is the canonical representative of a row space, which is what the ideal
//! engines use to compare truncated ideal slices.

use crate::rational::Rational;

/// Reduced row echelon form: pivots are 1, pivot columns are cleared, zero
/// rows dropped, rows ordered by pivot column. Canonical for the row space.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in &mut rows {
        r.resize(ncols, Rational::zero());
    }
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col].recip();
        for c in col..ncols {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        for i in 0..rows.len() {
            if i != pivot_row && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in col..ncols {
                    rows[i][c] = &rows[i][c] - &(&factor * &rows[pivot_row][c]);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Basis of `{x : M x = 0}`, returned in RREF (canonical).
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let reduced = rref(rows.to_vec());
    let mut pivot_cols = Vec::new();
    for row in &reduced {
        if let Some(col) = row.iter().position(|c| !c.is_zero()) {
            pivot_cols.push(col);
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            let entry = reduced[ri].get(free).cloned().unwrap_or_else(Rational::zero);
            v[pc] = -entry;
        }
        basis.push(v);
    }
    rref(basis)
}

/// Reduces `v` against RREF rows; `true` iff `v` lies in their span.
pub fn in_row_span(rref_rows: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut v = v.to_vec();
    for row in rref_rows {
        let pivot = row.iter().position(|c| !c.is_zero());
        let Some(p) = pivot else { continue };
        if p < v.len() && !v[p].is_zero() {
            let factor = v[p].clone();
            for (c, rc) in row.iter().enumerate() {
                if c < v.len() {
                    v[c] = &v[c] - &(&factor * rc);
                } else if !rc.is_zero() {
                    return false;
                }
            }
        }
    }
    v.iter().all(|c| c.is_zero())
}

/// `true` iff every row of `inner` lies in the span of `outer` (both RREF).
pub fn span_contains(outer_rref: &[Vec<Rational>], inner_rref: &[Vec<Rational>]) -> bool {
    inner_rref.iter().all(|r| in_row_span(outer_rref, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rref_canonical() {
        let rows = vec![vec![q(2), q(4)], vec![q(1), q(2)], vec![q(0), q(3)]];
        let r = rref(rows);
        assert_eq!(r, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn rref_drops_zero_rows() {
        let rows = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(rref(rows), vec![vec![q(1), q(1)]]);
    }

    #[test]
    fn nullspace_of_sum_condition() {
        // x + y + z = 0
        let ns = nullspace(&[vec![q(1), q(1), q(1)]], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((&v[0] + &v[1]).clone() + v[2].clone() == Rational::zero());
        }
    }

    #[test]
    fn span_membership() {
        let basis = rref(vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]]);
        assert!(in_row_span(&basis, &[q(2), q(3), q(5)]));
        assert!(!in_row_span(&basis, &[q(1), q(0), q(0)]));
    }
}
