//! Dense linear algebra over a [`FieldSpec`].

use crate::field::{Fe, FieldSpec};

pub fn zeros(n: usize) -> Vec<Fe> {
    vec![Fe::ZERO; n]
}

/// `y += a·x`.
pub fn axpy(f: &FieldSpec, y: &mut [Fe], a: Fe, x: &[Fe]) {
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(a, xi));
        }
    }
}

pub fn scale(f: &FieldSpec, a: Fe, x: &[Fe]) -> Vec<Fe> {
    x.iter().map(|&v| f.mul(a, v)).collect()
}

pub fn add(f: &FieldSpec, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
}

pub fn sub(f: &FieldSpec, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(&a, &b)| f.sub(a, b)).collect()
}

pub fn is_zero(x: &[Fe]) -> bool {
    x.iter().all(|v| v.is_zero())
}

/// An incrementally built semi-echelon basis: each stored row has a leading
/// 1 in its pivot column and zeros in the pivot columns of earlier rows.
#[derive(Clone)]
pub struct Echelon<'a> {
    f: &'a FieldSpec,
    n: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl<'a> Echelon<'a> {
    pub fn new(f: &'a FieldSpec, n: usize) -> Self {
        Echelon {
            f,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn reduce(&self, mut v: Vec<Fe>) -> Vec<Fe> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                axpy(self.f, &mut v, self.f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        is_zero(&self.reduce(v.to_vec()))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Fe>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.f.inv(v[p]);
        self.rows.push(scale(self.f, inv, &v));
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &FieldSpec, m: &mut [Vec<Fe>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(m[r][c]);
        m[r] = scale(f, inv, &m[r]);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = f.neg(row[c]);
                axpy(f, row, k, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &FieldSpec, rows: &[Vec<Fe>], ncols: usize) -> usize {
    let mut e = Echelon::new(f, ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// A basis of `{x : M x = 0}`, one vector per free column, with a 1 in that
/// column.
pub fn nullspace(f: &FieldSpec, m: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let mut a: Vec<Vec<Fe>> = m.to_vec();
    let pivots = rref(f, &mut a, ncols);
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = zeros(ncols);
        v[free] = Fe::ONE;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(a[r][free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let f = FieldSpec::with_degree(5, 1).unwrap();
        let i = |k: i64| f.from_int(k);
        let m = vec![vec![i(1), i(2), i(3)], vec![i(2), i(4), i(0)]];
        assert_eq!(rank(&f, &m, 3), 2);
        let ns = nullspace(&f, &m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            assert!(dot.is_zero());
        }
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(m[0].clone()));
        assert!(!e.insert(scale(&f, i(3), &m[0])));
        assert!(e.insert(m[1].clone()));
        assert!(e.contains(&add(&f, &m[0], &m[1])));
    }
}
