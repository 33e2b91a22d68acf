//! The group algebra `kP`, its eigenbasis `w_i`, the cut algebra
//! `k(P⋊H)e ≅ k_α(P⋊L)` and the matrix subalgebra inside `kHe`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abelian::{AbCharacter, AbElement, FinAbGroup};
use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::extension::{ExtGroup, HElem, PhiFamily};
use crate::field::{Fe, FieldSpec};
use crate::linalg::{self, zeros, Echelon};
use crate::pgroup::{LAction, PGroupData};
use crate::scalar::RootScalar;

/// `y·x` for all `y ∈ L`, `x ∈ P`, as indices: `table[y·|P| + x]`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    pub p_group: FinAbGroup,
    pub l: FinAbGroup,
    table: Vec<u32>,
}

impl ActionTable {
    pub fn new(pg: &PGroupData, act: &LAction) -> Self {
        let p_group = pg.group();
        let l = act.l.clone();
        let np = p_group.order() as usize;
        let mut table = Vec::with_capacity(np * l.order() as usize);
        for y in l.elements() {
            let my = act.matrices(pg, &y);
            for x in p_group.elements() {
                table.push(p_group.index(&act.apply(pg, &my, &x)) as u32);
            }
        }
        ActionTable { p_group, l, table }
    }

    pub fn apply(&self, y: usize, x: usize) -> usize {
        self.table[y * self.p_group.order() as usize + x] as usize
    }
}

/// `kP` on the group-element basis.
pub fn build_kp(p_group: &FinAbGroup, field: Arc<FieldSpec>) -> StructAlgebra {
    let n = p_group.order() as usize;
    let labels = p_group.elements().map(|x| format!("{:?}", x.0)).collect();
    let mut one = zeros(n);
    one[0] = Fe::ONE;
    StructAlgebra::from_fn(field, labels, one, |a, b| {
        let s = p_group.add(&p_group.element(a), &p_group.element(b));
        vec![(p_group.index(&s), Fe::ONE)]
    })
}

/// Simultaneous eigenvectors `w_i ∈ J(kP)` of the `L`-action, lifting a
/// basis of `J/J²`.
#[derive(Clone, Debug)]
pub struct EigenBasisW {
    /// Coefficients over the group basis of `P`.
    pub w: Vec<Vec<Fe>>,
    pub psi: Vec<AbCharacter>,
    pub exponents: Vec<u32>,
    pub components: Vec<usize>,
    /// Image of `w_i` in `J/J² ≅ F ⊗ P/Φ(P)`.
    pub frattini: Vec<Vec<Fe>>,
}

impl EigenBasisW {
    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

pub fn build_eigenbasis(
    pg: &PGroupData,
    act: &LAction,
    table: &ActionTable,
    field: &FieldSpec,
) -> Result<EigenBasisW> {
    let f = field;
    let l = &act.l;
    let p_group = &table.p_group;
    let np = p_group.order() as usize;
    let dual = l.dual_group();
    let eigen_of = |psi: &AbCharacter, j: usize| -> Result<Fe> {
        f.embed(&l.eval(psi, &l.generator(j)))
            .map_err(|e| Error::EigenvaluesNotInField(e.to_string()))
    };
    let inv_l = f.inv(f.from_int(l.order() as i64));
    let mut out = EigenBasisW {
        w: vec![],
        psi: vec![],
        exponents: vec![],
        components: vec![],
        frattini: vec![],
    };
    let r_total = pg.frattini_rank();
    for (c, comp) in pg.components.iter().enumerate() {
        let r = comp.rank;
        let start = pg.range(c).start;
        let mats: Vec<Vec<Vec<Fe>>> = act
            .mats
            .iter()
            .map(|per| {
                per[c]
                    .iter()
                    .map(|row| row.iter().map(|&x| f.from_int((x % pg.p) as i64)).collect())
                    .collect()
            })
            .collect();
        let mut found: Vec<(usize, usize, Vec<Fe>)> = Vec::new();
        for (pi, psi) in dual.iter().enumerate() {
            let mut eqs = Vec::new();
            for (j, m) in mats.iter().enumerate() {
                let lam = eigen_of(psi, j)?;
                for (i, row) in m.iter().enumerate() {
                    let mut e = row.clone();
                    e[i] = f.sub(e[i], lam);
                    eqs.push(e);
                }
            }
            for v in linalg::nullspace(f, &eqs, r) {
                let lead = v.iter().position(|x| !x.is_zero()).unwrap();
                let v = linalg::scale(f, f.inv(v[lead]), &v);
                found.push((lead, pi, v));
            }
        }
        if found.len() != r {
            return Err(Error::EigenvaluesNotInField(format!(
                "component {} has {} eigenvectors for rank {r}",
                c + 1,
                found.len()
            )));
        }
        found.sort_by_key(|a| (a.0, a.1));
        for (_, pi, v) in found {
            let psi = dual[pi].clone();
            // section s(v) = Σ v_k (b_k - 1)
            let mut s = zeros(np);
            for (k, &vk) in v.iter().enumerate() {
                let mut e = vec![0u64; p_group.rank()];
                e[start + k] = 1;
                let idx = p_group.index(&AbElement(e));
                s[idx] = f.add(s[idx], vk);
                s[0] = f.sub(s[0], vk);
            }
            // average: |L|^{-1} Σ_y ψ(y) y^{-1}·s
            let mut w = zeros(np);
            for y in l.elements() {
                let coeff = f.mul(inv_l, f.zeta(&l.eval(&psi, &y)));
                let yi = l.index(&l.neg(&y));
                for (x, &sx) in s.iter().enumerate() {
                    if !sx.is_zero() {
                        let t = table.apply(yi, x);
                        w[t] = f.add(w[t], f.mul(coeff, sx));
                    }
                }
            }
            let mut fr = zeros(r_total);
            fr[start..start + r].copy_from_slice(&v);
            out.w.push(w);
            out.psi.push(psi);
            out.exponents.push(comp.exponent);
            out.components.push(c);
            out.frattini.push(fr);
        }
    }
    Ok(out)
}

/// Image of `u ∈ J(kP)` in `J/J²`: `b_x - 1 ↦ x mod p`.
pub fn frattini_image(pg: &PGroupData, p_group: &FinAbGroup, f: &FieldSpec, u: &[Fe]) -> Vec<Fe> {
    let mut out = zeros(pg.frattini_rank());
    for (idx, &c) in u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let x = p_group.element(idx);
        for (k, &xk) in x.0.iter().enumerate() {
            let t = f.mul(c, f.from_int((xk % pg.p) as i64));
            out[k] = f.add(out[k], t);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EigenReport {
    pub in_radical: bool,
    pub eigen_equations: bool,
    pub nilpotency: bool,
    pub frattini_basis: bool,
    pub monomials_span: bool,
    pub commute: bool,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.in_radical
            && self.eigen_equations
            && self.nilpotency
            && self.frattini_basis
            && self.monomials_span
            && self.commute
    }
}

/// Checks the defining properties of `W` inside `kP`.
pub fn verify_eigenbasis(
    pg: &PGroupData,
    kp: &StructAlgebra,
    table: &ActionTable,
    wb: &EigenBasisW,
) -> EigenReport {
    let f = kp.field();
    let l = &table.l;
    let np = kp.dim();
    let in_radical =
        wb.w.iter()
            .all(|w| w.iter().fold(Fe::ZERO, |a, &b| f.add(a, b)).is_zero());
    let mut eigen = true;
    for (w, psi) in wb.w.iter().zip(&wb.psi) {
        for j in 0..l.rank() {
            let y = l.index(&l.generator(j));
            let mut moved = zeros(np);
            for (x, &c) in w.iter().enumerate() {
                if !c.is_zero() {
                    moved[table.apply(y, x)] = c;
                }
            }
            let lam = f.zeta(&l.eval(psi, &l.generator(j)));
            eigen &= moved == linalg::scale(f, lam, w);
        }
    }
    let mut nilpotency = true;
    for (w, &n) in wb.w.iter().zip(&wb.exponents) {
        let mut acc = kp.one().to_vec();
        for _ in 0..pg.p.pow(n) {
            acc = kp.mul(&acc, w);
        }
        nilpotency &= linalg::is_zero(&acc);
    }
    let images: Vec<Vec<Fe>> =
        wb.w.iter()
            .map(|w| frattini_image(pg, &table.p_group, f, w))
            .collect();
    let frattini_basis =
        images == wb.frattini && linalg::rank(f, &images, pg.frattini_rank()) == pg.frattini_rank();
    // monomials ∏ w_i^{e_i}, 0 ≤ e_i < p^{n_i}
    let mut monomials = vec![kp.one().to_vec()];
    for (w, &n) in wb.w.iter().zip(&wb.exponents) {
        let mut next = Vec::with_capacity(monomials.len() * pg.p.pow(n) as usize);
        for m in &monomials {
            let mut cur = m.clone();
            for _ in 0..pg.p.pow(n) {
                next.push(cur.clone());
                cur = kp.mul(&cur, w);
            }
        }
        monomials = next;
    }
    let monomials_span = monomials.len() == np && linalg::rank(f, &monomials, np) == np;
    let mut commute = true;
    for a in &wb.w {
        for b in &wb.w {
            commute &= kp.mul(a, b) == kp.mul(b, a);
        }
    }
    EigenReport {
        in_radical,
        eigen_equations: eigen,
        nilpotency,
        frattini_basis,
        monomials_span,
        commute,
    }
}

/// `k(P⋊H)e` on the basis `b(x, y) = x·(0, y)·e`, indexed by
/// `index(x)·|L| + index(y)`, with
/// `b(x₁,y₁) b(x₂,y₂) = χ(α(y₁,y₂)) b(x₁ + y₁·x₂, y₁ + y₂)`.
#[derive(Clone, Debug)]
pub struct TwistedAlgebra {
    pub alg: StructAlgebra,
    pub np: usize,
    pub nl: usize,
    zeta_m: Vec<Fe>,
}

impl TwistedAlgebra {
    pub fn build(table: &ActionTable, h: &ExtGroup, field: Arc<FieldSpec>) -> Result<Self> {
        let np = table.p_group.order() as usize;
        let l = h.base();
        let nl = l.order() as usize;
        let m = h.m();
        let zeta_m: Vec<Fe> = (0..m)
            .map(|k| field.embed(&RootScalar::new(m, k as i64)))
            .collect::<Result<_>>()?;
        let p_group = &table.p_group;
        let labels = (0..np * nl)
            .map(|i| format!("{:?}|{:?}", p_group.element(i / nl).0, l.element(i % nl).0))
            .collect();
        let mut one = zeros(np * nl);
        one[0] = Fe::ONE;
        // y-sums, cached
        let sums: Vec<usize> = (0..nl * nl)
            .map(|k| l.index(&l.add(&l.element(k / nl), &l.element(k % nl))))
            .collect();
        let padd: Vec<usize> = if np * np <= 1 << 16 {
            (0..np * np)
                .map(|k| {
                    p_group.index(&p_group.add(&p_group.element(k / np), &p_group.element(k % np)))
                })
                .collect()
        } else {
            vec![]
        };
        let alg = StructAlgebra::from_fn(field, labels, one, |a, b| {
            let (x1, y1) = (a / nl, a % nl);
            let (x2, y2) = (b / nl, b % nl);
            let moved = table.apply(y1, x2);
            let x = if padd.is_empty() {
                p_group.index(&p_group.add(&p_group.element(x1), &p_group.element(moved)))
            } else {
                padd[x1 * np + moved]
            };
            let y = sums[y1 * nl + y2];
            vec![(x * nl + y, zeta_m[h.log_alpha_idx(y1, y2) as usize])]
        });
        Ok(TwistedAlgebra {
            alg,
            np,
            nl,
            zeta_m,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> &FieldSpec {
        self.alg.field()
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        x * self.nl + y
    }

    /// `u ∈ kP` as an element `Σ u_x b(x, 0)`.
    pub fn embed_kp(&self, u: &[Fe]) -> Vec<Fe> {
        let mut v = zeros(self.dim());
        for (x, &c) in u.iter().enumerate() {
            v[self.index(x, 0)] = c;
        }
        v
    }

    /// `(z, y) ↦ ζ_m^z b(0, y)`.
    pub fn group_element(&self, h: &ExtGroup, g: &HElem) -> Vec<Fe> {
        let mut v = zeros(self.dim());
        v[self.index(0, h.base().index(&g.x))] = self.zeta_m[g.z as usize];
        v
    }

    /// `e_φ = |Z(H)|^{-1} Σ_{h ∈ Z(H)} φ(h^{-1}) h e`.
    pub fn e_phi(&self, h: &ExtGroup, phis: &PhiFamily, v: usize) -> Vec<Fe> {
        let f = self.field();
        let l = h.base();
        let mut out = zeros(self.dim());
        let rad: Vec<AbElement> = phis.radical().elements(l);
        let scale = f.inv(f.from_int(h.center_order() as i64));
        for z in 0..h.m() {
            for x in &rad {
                let g = HElem { z, x: x.clone() };
                let coeff = f.mul(scale, f.zeta(&phis.eval(h, v, &g).inv()));
                let gv = self.group_element(h, &g);
                linalg::axpy(f, &mut out, coeff, &gv);
            }
        }
        out
    }

    /// Spanning set `Σ_φ ξ_φ(y)^{-1} e_φ (0, y)` of the matrix subalgebra.
    pub fn mat_spanning(&self, h: &ExtGroup, phis: &PhiFamily, idem: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
        let f = self.field();
        let l = h.base();
        l.elements()
            .map(|y| {
                let mut d = zeros(self.dim());
                for (v, e) in idem.iter().enumerate() {
                    let c = f.zeta(&l.eval(&phis.xi[v], &y).inv());
                    linalg::axpy(f, &mut d, c, e);
                }
                self.alg.mul(&d, &self.group_element(h, &h.lift(&y)))
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatReport {
    pub dimension: usize,
    pub expected: u64,
    pub closed: bool,
    pub contains_identity: bool,
    pub center_dimension: usize,
}

impl MatReport {
    pub fn passed(&self) -> bool {
        self.dimension as u64 == self.expected
            && self.closed
            && self.contains_identity
            && self.center_dimension == 1
    }
}

/// A basis of the matrix subalgebra with its dimension, closure, unit and
/// center checks. Errors with `DimensionMismatch` when the dimension is not
/// `|H : Z(H)|`.
pub fn build_mat_subalgebra(
    ta: &TwistedAlgebra,
    h: &ExtGroup,
    phis: &PhiFamily,
    idem: &[Vec<Fe>],
) -> Result<(Vec<Vec<Fe>>, MatReport)> {
    let f = ta.field();
    let span = ta.mat_spanning(h, phis, idem);
    let mut ech = Echelon::new(f, ta.dim());
    let mut basis = Vec::new();
    for s in &span {
        if ech.insert(s.clone()) {
            basis.push(s.clone());
        }
    }
    let expected = h.order() / h.center_order();
    if basis.len() as u64 != expected {
        return Err(Error::DimensionMismatch {
            what: "matrix subalgebra".into(),
            expected: expected as usize,
            found: basis.len(),
        });
    }
    let mut closed = true;
    for a in &basis {
        for b in &basis {
            closed &= ech.contains(&ta.alg.mul(a, b));
        }
    }
    let contains_identity = ech.contains(ta.alg.one());
    // center: Σ c_k m_k commuting with every m_j, restricted to kHe coordinates
    let coords: Vec<usize> = (0..ta.nl).map(|y| ta.index(0, y)).collect();
    let k = basis.len();
    let comms: Vec<Vec<Vec<Fe>>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| ta.alg.commutator(a, b)).collect())
        .collect();
    let mut rows = Vec::new();
    for j in 0..k {
        for &c in &coords {
            rows.push((0..k).map(|i| comms[i][j][c]).collect::<Vec<Fe>>());
        }
    }
    let center_dimension = linalg::nullspace(f, &rows, k).len();
    Ok((
        basis.clone(),
        MatReport {
            dimension: basis.len(),
            expected,
            closed,
            contains_identity,
            center_dimension,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::AlternatingForm;
    use crate::pgroup::Component;

    fn setup(
        p: u64,
        comps: Vec<(u32, usize)>,
        l: Vec<u64>,
        mats: Vec<Vec<Vec<Vec<i64>>>>,
        form: &[(usize, usize, u64, i64)],
    ) -> (PGroupData, LAction, ExtGroup, PhiFamily, Arc<FieldSpec>) {
        let pg = PGroupData::new(
            p,
            comps
                .into_iter()
                .map(|(n, r)| Component {
                    exponent: n,
                    rank: r,
                })
                .collect(),
        )
        .unwrap();
        let l = FinAbGroup::new(l);
        let act = LAction::new(&pg, l.clone(), mats).unwrap();
        let e: Vec<_> = form
            .iter()
            .map(|&(i, j, n, k)| (i, j, RootScalar::new(n, k)))
            .collect();
        let h = ExtGroup::build(&AlternatingForm::new(&l, &e).unwrap()).unwrap();
        let phis = PhiFamily::build(&h).unwrap();
        let mut orders = vec![h.m(), l.exponent()];
        orders.extend(phis.value_orders());
        let f = Arc::new(FieldSpec::make(p, &orders).unwrap());
        (pg, act, h, phis, f)
    }

    #[test]
    fn s3_eigenvector() {
        let (pg, act, _, _, f) = setup(3, vec![(1, 1)], vec![2], vec![vec![vec![vec![2]]]], &[]);
        let table = ActionTable::new(&pg, &act);
        let wb = build_eigenbasis(&pg, &act, &table, &f).unwrap();
        assert_eq!(wb.len(), 1);
        assert_eq!(
            act.l.eval(&wb.psi[0], &act.l.generator(0)),
            RootScalar::new(2, 1)
        );
        // w = ((b - 1) - (b^{-1} - 1)) / 2 · 2: proportional to b - b^2
        let w = &wb.w[0];
        assert!(w[0].is_zero());
        assert_eq!(w[1], f.neg(w[2]));
        let kp = build_kp(&table.p_group, f.clone());
        let rep = verify_eigenbasis(&pg, &kp, &table, &wb);
        assert!(rep.passed(), "{rep:?}");
        // w^3 by polynomial expansion: (b - b^2)^3 = b^3 - b^6 = 0 in char 3
        let mut cube = kp.one().to_vec();
        for _ in 0..3 {
            cube = kp.mul(&cube, w);
        }
        assert!(linalg::is_zero(&cube));
    }

    #[test]
    fn diagonal_action_gives_coordinate_eigenvectors() {
        let (pg, act, _, _, f) = setup(
            5,
            vec![(1, 2)],
            vec![4, 4],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 2]]],
            ],
            &[(0, 1, 4, 1)],
        );
        let table = ActionTable::new(&pg, &act);
        let wb = build_eigenbasis(&pg, &act, &table, &f).unwrap();
        let l = &act.l;
        // w_1 = 4^{-1} Σ_k 2^k b(2^{-k} e_1): supported on the C_5^* orbit of e_1
        let b1 = table.p_group.index(&AbElement(vec![1, 0]));
        assert!(wb.w[0][0].is_zero());
        assert_eq!(wb.w[0][b1], f.inv(f.from_int(4)));
        assert_eq!(wb.w[0].iter().filter(|x| !x.is_zero()).count(), 4);
        assert_eq!(wb.frattini[0], vec![Fe::ONE, Fe::ZERO]);
        assert_eq!(f.zeta(&l.eval(&wb.psi[0], &l.generator(0))), f.from_int(2));
        assert_eq!(f.zeta(&l.eval(&wb.psi[0], &l.generator(1))), f.from_int(1));
        let kp = build_kp(&table.p_group, f);
        assert!(verify_eigenbasis(&pg, &kp, &table, &wb).passed());
    }

    #[test]
    fn block_action_over_f4() {
        let a = vec![
            vec![0, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        let b = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 1],
        ];
        let (pg, act, h, phis, f) = setup(
            2,
            vec![(1, 4)],
            vec![3, 3],
            vec![vec![a], vec![b]],
            &[(0, 1, 3, 1)],
        );
        assert_eq!(f.size(), 4);
        let table = ActionTable::new(&pg, &act);
        let wb = build_eigenbasis(&pg, &act, &table, &f).unwrap();
        assert_eq!(wb.len(), 4);
        let kp = build_kp(&table.p_group, f.clone());
        assert!(verify_eigenbasis(&pg, &kp, &table, &wb).passed());
        let ta = TwistedAlgebra::build(&table, &h, f).unwrap();
        assert_eq!(ta.dim(), 144);
        ta.alg.check(40, 20_000, 1).unwrap();
        let idem: Vec<Vec<Fe>> = (0..phis.len()).map(|v| ta.e_phi(&h, &phis, v)).collect();
        let (_, rep) = build_mat_subalgebra(&ta, &h, &phis, &idem).unwrap();
        assert_eq!(rep.dimension, 9);
        assert!(rep.passed());
    }

    #[test]
    fn idempotents_and_matrix_algebra() {
        let (pg, act, h, phis, f) = setup(
            5,
            vec![(1, 2)],
            vec![4, 4],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 2]]],
            ],
            &[(0, 1, 4, 1)],
        );
        let table = ActionTable::new(&pg, &act);
        let ta = TwistedAlgebra::build(&table, &h, f.clone()).unwrap();
        assert_eq!(ta.dim(), 400);
        let e = ta.e_phi(&h, &phis, 0);
        assert_eq!(e.iter().filter(|x| !x.is_zero()).count(), 1);
        assert_eq!(ta.alg.mul(&e, &e), e);
        let (_, rep) = build_mat_subalgebra(&ta, &h, &phis, &[e]).unwrap();
        assert_eq!(rep.dimension, 16);
        assert!(rep.passed());
    }

    #[test]
    fn degenerate_idempotents_are_orthogonal() {
        // P = C_5^2, L = C_4 x C_2 acting diagonally, form of order 2
        let (pg, act, h, phis, f) = setup(
            5,
            vec![(1, 2)],
            vec![4, 2],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 4]]],
            ],
            &[(0, 1, 2, 1)],
        );
        let table = ActionTable::new(&pg, &act);
        let ta = TwistedAlgebra::build(&table, &h, f.clone()).unwrap();
        let idem: Vec<Vec<Fe>> = (0..phis.len()).map(|v| ta.e_phi(&h, &phis, v)).collect();
        assert_eq!(idem.len(), 2);
        let mut sum = zeros(ta.dim());
        for (i, a) in idem.iter().enumerate() {
            sum = linalg::add(&f, &sum, a);
            for (j, b) in idem.iter().enumerate() {
                let prod = ta.alg.mul(a, b);
                if i == j {
                    assert_eq!(&prod, a);
                } else {
                    assert!(linalg::is_zero(&prod));
                }
            }
        }
        assert_eq!(sum, ta.alg.one());
        let (_, rep) = build_mat_subalgebra(&ta, &h, &phis, &idem).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.dimension, 4);
    }
}
