//! Brute-force checks computed from structure constants and presentation
//! data alone.

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec};
use crate::linalg::{self, zeros, Echelon};
use crate::quiver::QuiverPresentation;

/// Expresses vectors in a fixed basis of a subspace.
pub struct Coordinates<'a> {
    f: &'a FieldSpec,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
    /// `transform · basis = rows`.
    transform: Vec<Vec<Fe>>,
}

impl<'a> Coordinates<'a> {
    /// Errors if `basis` is linearly dependent.
    pub fn new(f: &'a FieldSpec, basis: &[Vec<Fe>]) -> Result<Self> {
        let k = basis.len();
        let n = basis.first().map_or(0, |b| b.len());
        let mut aug: Vec<Vec<Fe>> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut row = b.clone();
                row.extend((0..k).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }));
                row
            })
            .collect();
        let pivots = linalg::rref(f, &mut aug, n);
        if pivots.len() != k {
            return Err(Error::validation("basis is linearly dependent"));
        }
        let rows = aug.iter().map(|r| r[..n].to_vec()).collect();
        let transform = aug.iter().map(|r| r[n..].to_vec()).collect();
        Ok(Coordinates {
            f,
            rows,
            pivots,
            transform,
        })
    }

    pub fn coords(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        let f = self.f;
        let mut rest = v.to_vec();
        let mut c_rows = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = rest[p];
            c_rows.push(c);
            if !c.is_zero() {
                linalg::axpy(f, &mut rest, f.neg(c), row);
            }
        }
        if !linalg::is_zero(&rest) {
            return None;
        }
        let mut out = zeros(self.rows.len());
        for (c, t) in c_rows.iter().zip(&self.transform) {
            linalg::axpy(f, &mut out, *c, t);
        }
        Some(out)
    }
}

/// Structure constants of the subalgebra spanned by `basis`, whose first
/// element need not be the unit; `one` gives the unit in `basis`
/// coordinates after closure is checked.
pub fn subalgebra(
    alg: &StructAlgebra,
    basis: &[Vec<Fe>],
    labels: Vec<String>,
) -> Result<StructAlgebra> {
    let f = alg.field();
    let co = Coordinates::new(f, basis)?;
    let k = basis.len();
    let mut table = vec![Vec::new(); k * k];
    for a in 0..k {
        for b in 0..k {
            let c = co.coords(&alg.mul(&basis[a], &basis[b])).ok_or_else(|| {
                Error::AlgebraCheck(format!("span is not closed under {a} * {b}"))
            })?;
            table[a * k + b] = c
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect::<Vec<_>>();
        }
    }
    let one = co
        .coords(alg.one())
        .ok_or_else(|| Error::AlgebraCheck("span does not contain the unit".into()))?;
    Ok(StructAlgebra::from_fn(
        alg.field_arc(),
        labels,
        one,
        |a, b| table[a * k + b].clone(),
    ))
}

/// Basis of `{x : xb = bx for every basis element b}`.
pub fn center_of(alg: &StructAlgebra) -> Vec<Vec<Fe>> {
    let f = alg.field();
    let n = alg.dim();
    let mut space: Vec<Vec<Fe>> = (0..n).map(|i| alg.basis_vector(i)).collect();
    for j in 0..n {
        if space.is_empty() {
            break;
        }
        let bj = alg.basis_vector(j);
        let comms: Vec<Vec<Fe>> = space.iter().map(|v| alg.commutator(v, &bj)).collect();
        if comms.iter().all(|c| linalg::is_zero(c)) {
            continue;
        }
        // columns are the current basis vectors
        let rows: Vec<Vec<Fe>> = (0..n)
            .map(|c| comms.iter().map(|v| v[c]).collect())
            .collect();
        let kernel = linalg::nullspace(f, &rows, space.len());
        space = kernel
            .iter()
            .map(|coef| {
                let mut v = zeros(n);
                for (c, s) in coef.iter().zip(&space) {
                    linalg::axpy(f, &mut v, *c, s);
                }
                v
            })
            .collect();
    }
    space
}

/// Span of all products `x·y` with `x ∈ I`, `y ∈ J` (given by bases).
fn product_span(alg: &StructAlgebra, i: &[Vec<Fe>], j: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let mut e = Echelon::new(alg.field(), alg.dim());
    for x in i {
        for y in j {
            if !e.is_full() {
                e.insert(alg.mul(x, y));
            }
        }
    }
    e.rows().to_vec()
}

fn is_ideal(alg: &StructAlgebra, ideal: &[Vec<Fe>]) -> bool {
    let mut e = Echelon::new(alg.field(), alg.dim());
    for v in ideal {
        e.insert(v.clone());
    }
    (0..alg.dim()).all(|i| {
        let b = alg.basis_vector(i);
        ideal
            .iter()
            .all(|v| e.contains(&alg.mul(&b, v)) && e.contains(&alg.mul(v, &b)))
    })
}

/// Ranks of `I, I², I³, ...` until they vanish or stabilize.
pub fn power_ranks(alg: &StructAlgebra, ideal: &[Vec<Fe>]) -> Vec<usize> {
    let mut ranks = vec![ideal.len()];
    let mut cur = ideal.to_vec();
    while !cur.is_empty() {
        let next = product_span(alg, &cur, ideal);
        if next.len() == cur.len() {
            break;
        }
        ranks.push(next.len());
        cur = next;
    }
    ranks
}

fn is_nilpotent(alg: &StructAlgebra, ideal: &[Vec<Fe>]) -> bool {
    ideal.is_empty() || power_ranks(alg, ideal).last() == Some(&0)
}

/// `Tr(L_{b_k})` for each basis element.
fn regular_traces(alg: &StructAlgebra) -> Vec<Fe> {
    let f = alg.field();
    (0..alg.dim())
        .map(|k| {
            (0..alg.dim()).fold(Fe::ZERO, |acc, j| {
                alg.basis_product(k, j)
                    .iter()
                    .filter(|(c, _)| *c as usize == j)
                    .fold(acc, |a, &(_, v)| f.add(a, v))
            })
        })
        .collect()
}

/// Radical of the trace form `(x, y) ↦ Tr(L_{xy})`.
fn trace_radical(alg: &StructAlgebra) -> Vec<Vec<Fe>> {
    let f = alg.field();
    let n = alg.dim();
    let t = regular_traces(alg);
    let gram: Vec<Vec<Fe>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    alg.basis_product(i, j)
                        .iter()
                        .fold(Fe::ZERO, |a, &(c, v)| f.add(a, f.mul(v, t[c as usize])))
                })
                .collect()
        })
        .collect();
    linalg::nullspace(f, &gram, n)
}

/// Dimension of the algebra over the prime field above which the
/// power-trace chain is not attempted.
pub const PRIME_FIELD_CAP: usize = 48;

/// Left multiplication by `u` on prime-field coordinates `(basis i, power t)`.
fn left_matrix_fp(alg: &StructAlgebra, u: &[Fe], fp_basis: &[Vec<Fe>]) -> Vec<Vec<u64>> {
    let f = alg.field();
    let e = f.degree() as usize;
    let nn = fp_basis.len();
    let mut m = vec![vec![0u64; nn]; nn];
    for (col, b) in fp_basis.iter().enumerate() {
        let prod = alg.mul(u, b);
        for (i, &c) in prod.iter().enumerate() {
            for (t, &x) in f.coords(c).iter().enumerate() {
                m[i * e + t][col] = x;
            }
        }
    }
    m
}

fn trace_of_power(m: &[Vec<u64>], k: u64, modulus: u64) -> u64 {
    let n = m.len();
    let base: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x % modulus).collect())
        .collect();
    if k == 1 {
        return (0..n).fold(0, |s, i| (s + base[i][i]) % modulus);
    }
    // entries stay below modulus ≤ p·n, so n·modulus² fits in u64
    let mul = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
        let mut c = vec![vec![0u64; n]; n];
        for i in 0..n {
            let row = &mut c[i];
            for l in 0..n {
                let x = a[i][l];
                if x == 0 {
                    continue;
                }
                for (cj, &bj) in row.iter_mut().zip(&b[l]) {
                    *cj += x * bj;
                }
            }
            for cj in row.iter_mut() {
                *cj %= modulus;
            }
        }
        c
    };
    let mut base = base;
    let mut acc: Option<Vec<Vec<u64>>> = None;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => mul(&a, &base),
            });
        }
        k >>= 1;
        if k > 0 {
            base = mul(&base, &base);
        }
    }
    let acc = acc.expect("k > 0");
    (0..n).fold(0, |s, i| (s + acc[i][i]) % modulus)
}

/// Power-trace chain over the prime field: `I_i = {a ∈ I_{i-1} : g_i(ab) = 0
/// for all b}` with `g_i(a) = (Tr(ã^{p^i}) mod p^{i+1}) / p^i` for an integer
/// lift `ã` of left multiplication; the last term is the radical.
fn power_trace_radical(alg: &StructAlgebra) -> Vec<Vec<Fe>> {
    let f = alg.field();
    let p = f.characteristic();
    let e = f.degree() as usize;
    let n = alg.dim();
    let nn = n * e;
    let fp_basis: Vec<Vec<Fe>> = (0..n)
        .flat_map(|i| (0..e).map(move |t| (i, t)))
        .map(|(i, t)| {
            let mut v = zeros(n);
            v[i] = f.from_packed(p.pow(t as u32));
            v
        })
        .collect();
    let mut l = 0u32;
    while p.pow(l + 1) <= nn as u64 {
        l += 1;
    }
    let mut ideal = fp_basis.clone();
    for i in 0..=l {
        let modulus = p.pow(i + 1);
        let pi = p.pow(i);
        // g[k][col] for basis a_k of the current ideal and b_col of A
        let g: Vec<Vec<u64>> = ideal
            .iter()
            .map(|a| {
                fp_basis
                    .iter()
                    .map(|b| {
                        let m = left_matrix_fp(alg, &alg.mul(a, b), &fp_basis);
                        trace_of_power(&m, pi, modulus) / pi
                    })
                    .collect()
            })
            .collect();
        // c with Σ_k c_k g[k][col] = 0 over F_p
        let fp = FieldSpec::with_degree(p, 1).expect("prime field");
        let rows: Vec<Vec<Fe>> = (0..nn)
            .map(|col| g.iter().map(|gk| fp.from_int(gk[col] as i64)).collect())
            .collect();
        let kernel = linalg::nullspace(&fp, &rows, ideal.len());
        ideal = kernel
            .iter()
            .map(|c| {
                let mut v = zeros(n);
                for (ck, a) in c.iter().zip(&ideal) {
                    let ck = f.from_int(fp.packed(*ck) as i64);
                    linalg::axpy(f, &mut v, ck, a);
                }
                v
            })
            .collect();
    }
    let mut ech = Echelon::new(f, n);
    for v in ideal {
        ech.insert(v);
    }
    ech.rows().to_vec()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum RadicalMethod {
    TraceForm,
    PowerTrace,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Radical {
    pub dimension: usize,
    pub semisimple_dimension: usize,
    pub method: RadicalMethod,
    pub power_ranks: Vec<usize>,
}

/// `(dim J, dim A/J)`. The trace-form radical is used when it is a
/// nilpotent ideal; otherwise the power-trace chain, when the algebra is
/// small enough over the prime field.
pub fn radical_and_semisimple_rank(alg: &StructAlgebra) -> Result<Radical> {
    let n = alg.dim();
    let t = trace_radical(alg);
    let (j, method) = if is_nilpotent(alg, &t) {
        (t, RadicalMethod::TraceForm)
    } else if n * alg.field().degree() as usize <= PRIME_FIELD_CAP {
        (power_trace_radical(alg), RadicalMethod::PowerTrace)
    } else {
        return Err(Error::DimensionMismatch {
            what: "radical computation over the prime field (size cap)".into(),
            expected: PRIME_FIELD_CAP,
            found: n * alg.field().degree() as usize,
        });
    };
    if !is_ideal(alg, &j) || !is_nilpotent(alg, &j) {
        return Err(Error::AlgebraCheck(
            "computed radical is not a nilpotent ideal".into(),
        ));
    }
    Ok(Radical {
        dimension: j.len(),
        semisimple_dimension: n - j.len(),
        method,
        power_ranks: power_ranks(alg, &j),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WedderburnReport {
    pub dimension: usize,
    pub blocks: usize,
    pub block_dimension: u64,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub central: bool,
    pub sum_is_one: bool,
    pub corner_dimensions: Vec<usize>,
}

impl WedderburnReport {
    pub fn passed(&self) -> bool {
        self.dimension as u64 == self.blocks as u64 * self.block_dimension
            && self.idempotent
            && self.orthogonal
            && self.central
            && self.sum_is_one
            && self
                .corner_dimensions
                .iter()
                .all(|&d| d as u64 == self.block_dimension)
    }
}

/// Checks `kHe ≅ ∏_φ Mat_m(k)` numerically through the `e_φ`.
pub fn wedderburn_check(
    alg: &StructAlgebra,
    idem: &[Vec<Fe>],
    block_dimension: u64,
) -> WedderburnReport {
    let f = alg.field();
    let n = alg.dim();
    let mut idempotent = true;
    let mut orthogonal = true;
    let mut central = true;
    let mut sum = zeros(n);
    let mut corner_dimensions = Vec::new();
    for (i, a) in idem.iter().enumerate() {
        sum = linalg::add(f, &sum, a);
        for (j, b) in idem.iter().enumerate() {
            let ab = alg.mul(a, b);
            if i == j {
                idempotent &= ab == *a;
            } else {
                orthogonal &= linalg::is_zero(&ab);
            }
        }
        let mut corner = Echelon::new(f, n);
        for k in 0..n {
            let bk = alg.basis_vector(k);
            central &= linalg::is_zero(&alg.commutator(a, &bk));
            corner.insert(alg.mul(&alg.mul(a, &bk), a));
        }
        corner_dimensions.push(corner.rank());
    }
    WedderburnReport {
        dimension: n,
        blocks: idem.len(),
        block_dimension,
        idempotent,
        orthogonal,
        central,
        sum_is_one: sum == alg.one(),
        corner_dimensions,
    }
}

struct Degree {
    /// Basis words as arrow paths in traversal order.
    words: Vec<Vec<usize>>,
    starts: Vec<usize>,
    ends: Vec<usize>,
    /// Coordinates of the ambient space: (degree-(d-1) word, arrow).
    pair_index: HashMap<(usize, usize), usize>,
    npairs: usize,
    rref: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

struct Closure<'a> {
    f: &'a FieldSpec,
    degrees: Vec<Degree>,
}

impl Closure<'_> {
    /// Ambient coordinates in degree `path.len() ≥ 1`.
    fn ambient(&self, start: usize, path: &[usize]) -> Vec<Fe> {
        let d = path.len();
        let prev = self.reduce(start, &path[..d - 1]);
        let deg = &self.degrees[d];
        let mut v = zeros(deg.npairs);
        let last = path[d - 1];
        for (k, &c) in prev.iter().enumerate() {
            if let (false, Some(&i)) = (c.is_zero(), deg.pair_index.get(&(k, last))) {
                v[i] = self.f.add(v[i], c);
            }
        }
        v
    }

    /// Coordinates over the basis words of degree `path.len()`.
    fn reduce(&self, start: usize, path: &[usize]) -> Vec<Fe> {
        if path.is_empty() {
            let mut v = zeros(self.degrees[0].words.len());
            v[start] = Fe::ONE;
            return v;
        }
        let f = self.f;
        let mut v = self.ambient(start, path);
        let deg = &self.degrees[path.len()];
        for (row, &p) in deg.rref.iter().zip(&deg.pivots) {
            let c = v[p];
            if !c.is_zero() {
                linalg::axpy(f, &mut v, f.neg(c), row);
            }
        }
        deg.free.iter().map(|&i| v[i]).collect()
    }
}

/// Dimension of `kQ/I` by degree-wise linear closure: degree `d` is
/// spanned by degree-`(d-1)` classes followed by one arrow, modulo every
/// relation preceded by a degree-`(d-k)` class. Stops when a degree
/// vanishes; errors once the total exceeds `cap`.
pub fn independent_dimension_count(
    q: &QuiverPresentation,
    f: &FieldSpec,
    cap: usize,
) -> Result<usize> {
    let mut rels: Vec<Vec<(Fe, Vec<usize>)>> = Vec::new();
    for c in &q.commutations {
        let ai = q.arrow_index(c.i, c.vertex);
        let aj = q.arrow_index(c.j, c.vertex);
        let aji = q.arrow_index(c.j, q.arrows[ai].target);
        let aij = q.arrow_index(c.i, q.arrows[aj].target);
        let qv = f.embed(&c.q)?;
        rels.push(vec![(Fe::ONE, vec![ai, aji]), (f.neg(qv), vec![aj, aij])]);
    }
    for pw in &q.powers {
        rels.push(vec![(Fe::ONE, pw.path.clone())]);
    }
    let nv = q.vertices.len();
    let r = q.arrow_types.len();
    let mut cl = Closure {
        f,
        degrees: vec![Degree {
            words: vec![vec![]; nv],
            starts: (0..nv).collect(),
            ends: (0..nv).collect(),
            pair_index: HashMap::new(),
            npairs: 0,
            rref: vec![],
            pivots: vec![],
            free: vec![],
        }],
    };
    let mut total = nv;
    loop {
        let d = cl.degrees.len();
        let prev = &cl.degrees[d - 1];
        let mut pairs = Vec::new();
        let mut pair_index = HashMap::new();
        for (k, &end) in prev.ends.iter().enumerate() {
            for i in 0..r {
                let a = q.arrow_index(i, end);
                pair_index.insert((k, a), pairs.len());
                pairs.push((k, a));
            }
        }
        cl.degrees.push(Degree {
            words: vec![],
            starts: vec![],
            ends: vec![],
            pair_index,
            npairs: pairs.len(),
            rref: vec![],
            pivots: vec![],
            free: vec![],
        });
        let mut rows: Vec<Vec<Fe>> = Vec::new();
        for rel in &rels {
            let k = rel[0].1.len();
            if k > d {
                continue;
            }
            let s = q.arrows[rel[0].1[0]].source;
            let base = &cl.degrees[d - k];
            for (u, &end) in base.ends.iter().enumerate() {
                if end != s {
                    continue;
                }
                let mut v = zeros(pairs.len());
                for (c, path) in rel {
                    let mut full = base.words[u].clone();
                    full.extend(path);
                    linalg::axpy(f, &mut v, *c, &cl.ambient(base.starts[u], &full));
                }
                rows.push(v);
            }
        }
        let pivots = linalg::rref(f, &mut rows, pairs.len());
        rows.truncate(pivots.len());
        let free: Vec<usize> = (0..pairs.len()).filter(|c| !pivots.contains(c)).collect();
        let prev = &cl.degrees[d - 1];
        let words = free
            .iter()
            .map(|&i| {
                let (k, a) = pairs[i];
                let mut w = prev.words[k].clone();
                w.push(a);
                w
            })
            .collect::<Vec<_>>();
        let starts = free.iter().map(|&i| prev.starts[pairs[i].0]).collect();
        let ends = free.iter().map(|&i| q.arrows[pairs[i].1].target).collect();
        let deg = cl.degrees.last_mut().unwrap();
        deg.rref = rows;
        deg.pivots = pivots;
        deg.free = free;
        deg.words = words;
        deg.starts = starts;
        deg.ends = ends;
        total += deg.words.len();
        if deg.words.is_empty() {
            return Ok(total);
        }
        if total > cap {
            return Err(Error::NonTerminating { cap });
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    /// What the check is evidence for.
    pub validates: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
    /// Checks not run, with the reason.
    #[serde(default)]
    pub skipped: Vec<String>,
    /// Values recorded without an expectation.
    #[serde(default)]
    pub notes: Vec<String>,
}

impl OracleReport {
    /// Runs `f`, timing it, and records its `(expected, computed, pass)`.
    pub fn record(
        &mut self,
        name: &str,
        validates: &str,
        f: impl FnOnce() -> (String, String, bool),
    ) {
        let t = Instant::now();
        let (expected, computed, pass) = f();
        self.checks.push(OracleCheck {
            name: name.into(),
            validates: validates.into(),
            expected,
            computed,
            pass,
            elapsed_ms: t.elapsed().as_millis(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&OracleCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Arrow, ArrowType, PowerRelation, Vertex};
    use std::sync::Arc;

    fn group_algebra(
        f: &Arc<FieldSpec>,
        n: usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> StructAlgebra {
        let mut one = zeros(n);
        one[0] = Fe::ONE;
        StructAlgebra::from_fn(
            f.clone(),
            (0..n).map(|i| format!("g{i}")).collect(),
            one,
            |a, b| vec![(mul(a, b), Fe::ONE)],
        )
    }

    /// S_3 as pairs (rotation r, flip s) ↦ index 2r + s, with s r s = r^{-1}.
    fn s3_mul(a: usize, b: usize) -> usize {
        let (r1, s1) = (a / 2, a % 2);
        let (r2, s2) = (b / 2, b % 2);
        let r = if s1 == 0 {
            (r1 + r2) % 3
        } else {
            (r1 + 3 - r2) % 3
        };
        2 * r + (s1 ^ s2)
    }

    #[test]
    fn centers() {
        let f = Arc::new(FieldSpec::with_degree(3, 1).unwrap());
        let c5 = group_algebra(&f, 5, |a, b| (a + b) % 5);
        assert_eq!(center_of(&c5).len(), 5);
        // class sums of S_3
        let s3 = group_algebra(&f, 6, s3_mul);
        assert_eq!(center_of(&s3).len(), 3);
    }

    #[test]
    fn radicals() {
        let f3 = Arc::new(FieldSpec::with_degree(3, 1).unwrap());
        let s3 = group_algebra(&f3, 6, s3_mul);
        let r = radical_and_semisimple_rank(&s3).unwrap();
        assert_eq!((r.dimension, r.semisimple_dimension), (4, 2));
        let c3 = group_algebra(&f3, 3, |a, b| (a + b) % 3);
        let r = radical_and_semisimple_rank(&c3).unwrap();
        assert_eq!(r.dimension, 2);
        // semisimple: trace form is enough
        let f5 = Arc::new(FieldSpec::with_degree(5, 1).unwrap());
        let c4 = group_algebra(&f5, 4, |a, b| (a + b) % 4);
        let r = radical_and_semisimple_rank(&c4).unwrap();
        assert_eq!(r.dimension, 0);
        assert_eq!(r.method, RadicalMethod::TraceForm);
        // C_2 x C_2 over F_4 goes through the prime field
        let f4 = Arc::new(FieldSpec::with_degree(2, 2).unwrap());
        let v4 = group_algebra(&f4, 4, |a, b| a ^ b);
        let r = radical_and_semisimple_rank(&v4).unwrap();
        assert_eq!((r.dimension, r.semisimple_dimension), (3, 1));
    }

    #[test]
    fn subalgebra_and_wedderburn() {
        let f5 = Arc::new(FieldSpec::with_degree(5, 1).unwrap());
        let c4 = group_algebra(&f5, 4, |a, b| (a + b) % 4);
        // primitive idempotents of kC_4 over F_5, with 2 of order 4
        let inv4 = f5.inv(f5.from_int(4));
        let idem: Vec<Vec<Fe>> = (0..4)
            .map(|k| {
                (0..4)
                    .map(|g| f5.mul(inv4, f5.pow(f5.from_int(2), -((k * g) as i64))))
                    .collect()
            })
            .collect();
        let w = wedderburn_check(&c4, &idem, 1);
        assert!(w.passed(), "{w:?}");
        let sub = subalgebra(
            &c4,
            &[c4.one().to_vec(), c4.basis_vector(2)],
            vec!["1".into(), "g2".into()],
        )
        .unwrap();
        sub.check(40, 0, 0).unwrap();
        assert!(subalgebra(
            &c4,
            &[c4.one().to_vec(), c4.basis_vector(1)],
            vec!["1".into(), "g".into()]
        )
        .is_err());
    }

    fn single_loop(length: u64, with_power: bool) -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec![Vertex {
                label: "[phi0]".into(),
                epsilon: vec![],
                xi: vec![0],
            }],
            arrow_types: vec![ArrowType {
                psi: vec![0],
                component: 0,
                exponent: 1,
            }],
            arrows: vec![Arrow {
                kind: 0,
                source: 0,
                target: 0,
                g: crate::extension::HElem {
                    z: 0,
                    x: crate::abelian::AbElement(vec![0]),
                },
            }],
            commutations: vec![],
            powers: if with_power {
                vec![PowerRelation {
                    kind: 0,
                    vertex: 0,
                    length,
                    path: vec![0; length as usize],
                }]
            } else {
                vec![]
            },
            p: 2,
        }
    }

    #[test]
    fn closure_counts() {
        let f = FieldSpec::with_degree(2, 1).unwrap();
        assert_eq!(
            independent_dimension_count(&single_loop(2, true), &f, 8).unwrap(),
            2
        );
        assert_eq!(
            independent_dimension_count(&single_loop(4, true), &f, 16).unwrap(),
            4
        );
        assert!(matches!(
            independent_dimension_count(&single_loop(2, false), &f, 8),
            Err(Error::NonTerminating { cap: 8 })
        ));
    }
}
