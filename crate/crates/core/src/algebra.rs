//! Finite-dimensional associative algebras given by sparse structure
//! constants.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec};
use crate::linalg::{self, zeros};

#[derive(Clone)]
pub struct StructAlgebra {
    field: Arc<FieldSpec>,
    labels: Vec<String>,
    /// `offsets[a·dim + b]..offsets[a·dim + b + 1]` indexes `entries`.
    offsets: Vec<u32>,
    entries: Vec<(u32, Fe)>,
    one: Vec<Fe>,
}

impl std::fmt::Debug for StructAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "StructAlgebra(dim {} over {})",
            self.dim(),
            self.field.name()
        )
    }
}

impl StructAlgebra {
    /// Builds the table from `product(a, b)`, which returns the nonzero
    /// coefficients of `b_a · b_b`.
    pub fn from_fn(
        field: Arc<FieldSpec>,
        labels: Vec<String>,
        one: Vec<Fe>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Fe)>,
    ) -> Self {
        let n = labels.len();
        let mut offsets = Vec::with_capacity(n * n + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for a in 0..n {
            for b in 0..n {
                for (c, v) in product(a, b) {
                    if !v.is_zero() {
                        entries.push((c as u32, v));
                    }
                }
                offsets.push(entries.len() as u32);
            }
        }
        StructAlgebra {
            field,
            labels,
            offsets,
            entries,
            one,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldSpec> {
        self.field.clone()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> &[Fe] {
        &self.one
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Fe> {
        let mut v = zeros(self.dim());
        v[a] = Fe::ONE;
        v
    }

    pub fn basis_product(&self, a: usize, b: usize) -> &[(u32, Fe)] {
        let k = a * self.dim() + b;
        &self.entries[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }

    pub fn mul(&self, u: &[Fe], v: &[Fe]) -> Vec<Fe> {
        let f = &*self.field;
        let mut w = zeros(self.dim());
        let vs: Vec<(usize, Fe)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, &x)| (i, x))
            .collect();
        for (a, &ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for &(b, vb) in &vs {
                let s = f.mul(ua, vb);
                for &(c, k) in self.basis_product(a, b) {
                    let c = c as usize;
                    w[c] = f.add(w[c], f.mul(s, k));
                }
            }
        }
        w
    }

    /// `uv - vu`.
    pub fn commutator(&self, u: &[Fe], v: &[Fe]) -> Vec<Fe> {
        linalg::sub(&self.field, &self.mul(u, v), &self.mul(v, u))
    }

    fn check_triple(&self, a: usize, b: usize, c: usize) -> bool {
        let (ea, eb, ec) = (
            self.basis_vector(a),
            self.basis_vector(b),
            self.basis_vector(c),
        );
        self.mul(&self.mul(&ea, &eb), &ec) == self.mul(&ea, &self.mul(&eb, &ec))
    }

    /// Associativity on all basis triples when `dim ≤ full_limit`, else on
    /// `samples` seeded random triples; plus the identity law on every
    /// basis element.
    pub fn check(&self, full_limit: usize, samples: usize, seed: u64) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            let ea = self.basis_vector(a);
            if self.mul(&self.one, &ea) != ea || self.mul(&ea, &self.one) != ea {
                return Err(Error::AlgebraCheck(format!(
                    "identity law fails at {}",
                    self.labels[a]
                )));
            }
        }
        let bad = |a: usize, b: usize, c: usize| {
            Error::AlgebraCheck(format!(
                "associativity fails at ({}, {}, {})",
                self.labels[a], self.labels[b], self.labels[c]
            ))
        };
        if n <= full_limit {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !self.check_triple(a, b, c) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !self.check_triple(a, b, c) {
                    return Err(bad(a, b, c));
                }
            }
        }
        Ok(())
    }
}
