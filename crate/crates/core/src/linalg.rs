//! Exact linear algebra over the cyclotomic field: sparse row echelon forms,
//! rank and null spaces, and signatures of Hermitian matrices by congruence.

use std::collections::BTreeMap;

use crate::scalars::{CycField, CycScalar};

pub type SparseRow = BTreeMap<usize, CycScalar>;

/// Incrementally built reduced row echelon form.
pub struct Echelon {
    field: &'static CycField,
    ncols: usize,
    /// pivot column -> row with a unit entry at the pivot and zeros at every
    /// other pivot column
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(field: &'static CycField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            let Some(pivot_row) = self.rows.get(&c) else {
                continue;
            };
            let Some(factor) = row.get(&c).cloned() else {
                continue;
            };
            for (j, v) in pivot_row {
                let entry = row.entry(*j).or_insert_with(|| self.field.zero());
                *entry = &*entry - &(&factor * v);
                if entry.is_zero() {
                    row.remove(j);
                }
            }
        }
        row
    }

    /// Adds a row; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        row.retain(|_, v| !v.is_zero());
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        // clear the new pivot column from the existing rows
        for other in self.rows.values_mut() {
            let Some(factor) = other.get(&pivot).cloned() else {
                continue;
            };
            for (j, v) in &row {
                let entry = other.entry(*j).or_insert_with(|| self.field.zero());
                *entry = &*entry - &(&factor * v);
                if entry.is_zero() {
                    other.remove(j);
                }
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    /// A basis of the null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<CycScalar>> {
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if self.rows.contains_key(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.ncols];
            v[free] = self.field.one();
            for (pivot, row) in &self.rows {
                if let Some(c) = row.get(&free) {
                    v[*pivot] = -c;
                }
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a dense matrix.
pub fn rank(field: &'static CycField, rows: &[Vec<CycScalar>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        let sparse: SparseRow = r
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        e.insert(sparse);
    }
    e.rank()
}

/// Counts of positive, negative and zero directions of a Hermitian form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

/// Whether `h[j][i] == conj(h[i][j])` for all entries.
pub fn is_hermitian(h: &[Vec<CycScalar>]) -> bool {
    let n = h.len();
    (0..n).all(|i| h[i].len() == n && (0..n).all(|j| h[j][i] == h[i][j].conj()))
}

/// Signature of a Hermitian matrix, by exact congruence diagonalization.
/// The diagonal entries produced are real elements of the field; their signs
/// are read from the numeric embedding.
pub fn hermitian_signature(h: &[Vec<CycScalar>]) -> Signature {
    let n = h.len();
    let mut a: Vec<Vec<CycScalar>> = h.to_vec();
    let mut sig = Signature {
        pos: 0,
        neg: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap_sym(&mut a, k, i);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .find(|&(i, j)| i != j && !a[i][j].is_zero())
            {
                // row_i += c row_j and col_i += conj(c) col_j with c = a[i][j]
                let c = a[i][j].clone();
                add_sym(&mut a, i, j, &c);
                swap_sym(&mut a, k, i);
            } else {
                sig.zero += n - k;
                break;
            }
        }
        let d = a[k][k].clone();
        let dn = d.to_complex();
        debug_assert!(dn.im.abs() < 1e-9 * (1.0 + dn.re.abs()));
        if dn.re > 0.0 {
            sig.pos += 1;
        } else {
            sig.neg += 1;
        }
        let inv = d.inv().expect("nonzero pivot");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            let fc = f.conj();
            for j in k..n {
                let v = &a[i][j] - &(&f * &a[k][j]);
                a[i][j] = v;
            }
            for j in k..n {
                let v = &a[j][i] - &(&a[j][k] * &fc);
                a[j][i] = v;
            }
        }
        k += 1;
    }
    sig
}

fn swap_sym(a: &mut [Vec<CycScalar>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_sym(a: &mut [Vec<CycScalar>], i: usize, j: usize, c: &CycScalar) {
    let n = a.len();
    let cc = c.conj();
    for col in 0..n {
        let v = &a[i][col] + &(c * &a[j][col]);
        a[i][col] = v;
    }
    for row in a.iter_mut().take(n) {
        let v = &row[i] + &(&row[j] * &cc);
        row[i] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> &'static CycField {
        CycField::new(3).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let field = f();
        let one = field.one();
        let two = field.int(2);
        let z = field.zero();
        let rows = vec![
            vec![one.clone(), two.clone(), z.clone()],
            vec![two.clone(), field.int(4), z.clone()],
            vec![z.clone(), z.clone(), field.q_pow(1)],
        ];
        assert_eq!(rank(field, &rows), 2);
        let mut e = Echelon::new(field, 3);
        for r in &rows {
            e.insert(
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect(),
            );
        }
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![field.int(-2), one, z]);
    }

    #[test]
    fn signatures() {
        let field = f();
        let z = field.zero();
        let i = field.i();
        // [[0, i], [-i, 0]] has one positive and one negative direction
        let h = vec![vec![z.clone(), i.clone()], vec![-&i, z.clone()]];
        assert!(is_hermitian(&h));
        assert_eq!(
            hermitian_signature(&h),
            Signature { pos: 1, neg: 1, zero: 0 }
        );
        let h = vec![
            vec![field.int(2), z.clone(), z.clone()],
            vec![z.clone(), field.int(-3), z.clone()],
            vec![z.clone(), z.clone(), z.clone()],
        ];
        assert_eq!(
            hermitian_signature(&h),
            Signature { pos: 1, neg: 1, zero: 1 }
        );
    }
}
