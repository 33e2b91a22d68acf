//! The automorphism `(x, y) ↦ (τx, y^p)` of `P⋊L` and the semilinear
//! isomorphism `k_α(P⋊L) → k_α(P⋊L)^{(p²)}` built from it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::abelian::AbElement;
use crate::cocycle::{solve_coboundary, verify_autfrob, Cocycle2, LAutomorphism};
use crate::error::{Error, Result};
use crate::extension::ExtGroup;
use crate::field::Fe;
use crate::group_algebra::{ActionTable, TwistedAlgebra};
use crate::linalg;
use crate::modmat::{self, ModMat};
use crate::pgroup::{LAction, PGroupData};
use crate::scalar::RootScalar;
use crate::snf::{smith, IMat};

const SEARCH_CAP: u64 = 10_000;

/// How the invertible intertwiner of one component was found.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum TauSearch {
    Sum,
    Generator(usize),
    Exhaustive { tried: u64 },
    Random { tried: u64 },
}

/// Per component, generators of `{τ : τ M_j = M_j^p τ}` over `Z/p^n`, as
/// row-major `r × r` matrices.
pub fn intertwiner_module(pg: &PGroupData, act: &LAction, c: usize) -> Vec<ModMat> {
    let r = pg.components[c].rank;
    let m = pg.modulus(c);
    let n = r * r;
    let mut rows: IMat = Vec::new();
    for per in &act.mats {
        let a = &per[c];
        let ap = modmat::pow(a, pg.p, m);
        // (τA - A^pτ)_{ik} = Σ_l τ_il A_lk - Σ_l Ap_il τ_lk
        for i in 0..r {
            for k in 0..r {
                let mut row = vec![0i128; n];
                for l in 0..r {
                    row[i * r + l] += a[l][k] as i128;
                    row[l * r + k] -= ap[i][l] as i128;
                }
                rows.push(row);
            }
        }
    }
    let to_mat = |v: Vec<i128>| -> ModMat {
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|k| v[i * r + k].rem_euclid(m as i128) as u64)
                    .collect()
            })
            .collect()
    };
    if rows.is_empty() {
        return (0..n)
            .map(|k| to_mat((0..n).map(|i| i128::from(i == k)).collect()))
            .collect();
    }
    let s = smith(&rows, n);
    let mi = m as i128;
    let mut gens = Vec::new();
    for k in 0..n {
        let d = s.diag.get(k).copied().unwrap_or(0).abs();
        let g = if d == 0 {
            1
        } else {
            mi / crate::arith::igcd(d, mi)
        };
        if g % mi == 0 {
            continue;
        }
        let v: Vec<i128> = (0..n).map(|i| s.v[i][k] * g).collect();
        let t = to_mat(v);
        if t.iter().flatten().any(|&x| x != 0) {
            gens.push(t);
        }
    }
    gens
}

fn combine(gens: &[ModMat], coeffs: &[u64], m: u64) -> ModMat {
    let r = gens[0].len();
    let mut out = vec![vec![0u64; r]; r];
    for (g, &c) in gens.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for i in 0..r {
            for k in 0..r {
                out[i][k] = ((out[i][k] as u128 + c as u128 * g[i][k] as u128) % m as u128) as u64;
            }
        }
    }
    out
}

/// An invertible `τ` per component with `τ M_y = M_{y^p} τ`.
pub fn solve_tau(
    pg: &PGroupData,
    act: &LAction,
    seed: u64,
) -> Result<(Vec<ModMat>, Vec<TauSearch>)> {
    let mut taus = Vec::new();
    let mut how = Vec::new();
    for c in 0..pg.components.len() {
        let m = pg.modulus(c);
        let gens = intertwiner_module(pg, act, c);
        if gens.is_empty() {
            return Err(Error::NoInvertibleSolution(format!(
                "component {} has no intertwiners",
                c + 1
            )));
        }
        let invertible = |t: &ModMat| modmat::inverse(t, pg.p, m).is_some();
        let k = gens.len();
        let mut found = None;
        let sum = combine(&gens, &vec![1; k], m);
        if invertible(&sum) {
            found = Some((sum, TauSearch::Sum));
        }
        if found.is_none() {
            found = gens
                .iter()
                .position(&invertible)
                .map(|i| (gens[i].clone(), TauSearch::Generator(i)));
        }
        if found.is_none() && (pg.p as f64).powi(k as i32) <= SEARCH_CAP as f64 {
            let total = pg.p.pow(k as u32);
            for code in 0..total {
                let mut coeffs = vec![0u64; k];
                let mut x = code;
                for cf in coeffs.iter_mut() {
                    *cf = x % pg.p;
                    x /= pg.p;
                }
                let t = combine(&gens, &coeffs, m);
                if invertible(&t) {
                    found = Some((t, TauSearch::Exhaustive { tried: code + 1 }));
                    break;
                }
            }
        }
        if found.is_none() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (c as u64) << 32);
            for tried in 1..=SEARCH_CAP {
                let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..m)).collect();
                let t = combine(&gens, &coeffs, m);
                if invertible(&t) {
                    found = Some((t, TauSearch::Random { tried }));
                    break;
                }
            }
        }
        let (t, h) = found.ok_or_else(|| {
            Error::NoInvertibleSolution(format!("component {}: search cap reached", c + 1))
        })?;
        taus.push(t);
        how.push(h);
    }
    if !intertwines(pg, act, &taus) {
        return Err(Error::NoInvertibleSolution(
            "intertwining check failed".into(),
        ));
    }
    Ok((taus, how))
}

pub fn intertwines(pg: &PGroupData, act: &LAction, taus: &[ModMat]) -> bool {
    act.mats.iter().all(|per| {
        (0..pg.components.len()).all(|c| {
            let m = pg.modulus(c);
            let ap = modmat::pow(&per[c], pg.p, m);
            modmat::mul(&taus[c], &per[c], m) == modmat::mul(&ap, &taus[c], m)
        })
    })
}

pub fn apply_tau(pg: &PGroupData, taus: &[ModMat], x: &AbElement) -> AbElement {
    let mut out = Vec::with_capacity(x.0.len());
    for (c, t) in taus.iter().enumerate() {
        out.extend(modmat::mul_vec(t, &x.0[pg.range(c)], pg.modulus(c)));
    }
    AbElement(out)
}

/// `(x, y) ↦ (τx, py)` on `P⋊L` as a permutation of `index(x)·|L| + index(y)`.
/// Errors unless it is a bijective homomorphism.
pub fn build_phi(pg: &PGroupData, table: &ActionTable, taus: &[ModMat]) -> Result<Vec<u32>> {
    let pgp = &table.p_group;
    let l = &table.l;
    let (np, nl) = (pgp.order() as usize, l.order() as usize);
    let tau: Vec<usize> = pgp
        .elements()
        .map(|x| pgp.index(&apply_tau(pg, taus, &x)))
        .collect();
    let py: Vec<usize> = l
        .elements()
        .map(|y| l.index(&l.scale(&y, pg.p as i64)))
        .collect();
    let perm: Vec<u32> = (0..np * nl)
        .map(|i| (tau[i / nl] * nl + py[i % nl]) as u32)
        .collect();
    let mut seen = vec![false; perm.len()];
    for &t in &perm {
        if std::mem::replace(&mut seen[t as usize], true) {
            return Err(Error::NotAutomorphism("not injective".into()));
        }
    }
    let mul = |a: usize, b: usize| -> usize {
        let (x1, y1, x2, y2) = (a / nl, a % nl, b / nl, b % nl);
        let x = pgp.index(&pgp.add(&pgp.element(x1), &pgp.element(table.apply(y1, x2))));
        x * nl + l.index(&l.add(&l.element(y1), &l.element(y2)))
    };
    let mut gens: Vec<usize> = (0..pgp.rank())
        .map(|k| pgp.index(&pgp.generator(k)) * nl)
        .collect();
    gens.extend((0..l.rank()).map(|j| l.index(&l.generator(j))));
    for &a in &gens {
        for &b in &gens {
            if perm[mul(a, b)] as usize != mul(perm[a] as usize, perm[b] as usize) {
                return Err(Error::NotAutomorphism(format!(
                    "not multiplicative at ({}, {})",
                    a, b
                )));
            }
        }
    }
    Ok(perm)
}

/// `σ(λ b(x, y)) = λ^{p²} c(y) b(τx, py)` with `c(y) = β(py)^{p²}`.
#[derive(Clone, Debug)]
pub struct SemilinearMap {
    pub perm: Vec<u32>,
    pub coeff: Vec<Fe>,
    pub power: u32,
}

impl SemilinearMap {
    pub fn apply(&self, ta: &TwistedAlgebra, u: &[Fe]) -> Vec<Fe> {
        let f = ta.field();
        let mut out = linalg::zeros(u.len());
        for (i, &c) in u.iter().enumerate() {
            if !c.is_zero() {
                out[self.perm[i] as usize] = f.mul(f.frobenius_power(c, self.power), self.coeff[i]);
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FrobeniusReport {
    pub autfrob: bool,
    pub single_twist_autfrob: bool,
    pub tau: Vec<ModMat>,
    pub tau_search: Vec<TauSearch>,
    pub intertwining: bool,
    pub automorphism: bool,
    pub beta: Vec<RootScalar>,
    pub coboundary: bool,
    pub pairs_checked: usize,
    pub multiplicative: bool,
    pub first_failure: Option<String>,
    pub bijective: bool,
    pub semilinear: bool,
    pub preserves_identity: bool,
    pub permutes_idempotents: bool,
    pub field: String,
}

impl FrobeniusReport {
    pub fn check(&self) -> Result<()> {
        if !self.autfrob {
            return Err(Error::NotCohomologous(
                "twisted and Frobenius forms differ".into(),
            ));
        }
        if !self.intertwining {
            return Err(Error::NoInvertibleSolution(
                "tau does not intertwine".into(),
            ));
        }
        if !self.automorphism {
            return Err(Error::NotAutomorphism("(x, y) -> (tau x, y^p)".into()));
        }
        if !self.multiplicative {
            return Err(Error::MultiplicativityFails(
                self.first_failure.clone().unwrap_or_default(),
            ));
        }
        if !self.bijective
            || !self.semilinear
            || !self.preserves_identity
            || !self.permutes_idempotents
        {
            return Err(Error::MultiplicativityFails(
                "bijectivity, semilinearity or idempotents".into(),
            ));
        }
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.check().is_ok()
    }
}

/// The witness `β` with `dβ = ^φα / α^{(p²)}`, `φ(y) = y^p`.
pub fn frobenius_coboundary(alpha: &Cocycle2, p: u64) -> Result<Vec<RootScalar>> {
    let l = alpha.group();
    let phi = LAutomorphism::power(l, p as i64)?;
    solve_coboundary(&alpha.twist(&phi), &alpha.frobenius_twist(p * p)?)
}

pub fn build_sigma(
    ta: &TwistedAlgebra,
    h: &ExtGroup,
    perm: Vec<u32>,
    beta: &[RootScalar],
    p: u64,
) -> Result<SemilinearMap> {
    let f = ta.field();
    let l = h.base();
    let nl = ta.nl;
    let c: Vec<Fe> = l
        .elements()
        .map(|y| {
            let b = beta[l.index(&l.scale(&y, p as i64))];
            Ok(f.frobenius_power(f.embed(&b)?, 2))
        })
        .collect::<Result<_>>()?;
    let coeff = (0..ta.dim()).map(|i| c[i % nl]).collect();
    Ok(SemilinearMap {
        perm,
        coeff,
        power: 2,
    })
}

pub struct FrobeniusInput<'a> {
    pub pg: &'a PGroupData,
    pub act: &'a LAction,
    pub table: &'a ActionTable,
    pub h: &'a ExtGroup,
    pub ta: &'a TwistedAlgebra,
    pub idem: &'a [Vec<Fe>],
    pub seed: u64,
    /// Multiplies `β` at `p·a_1` (at `0` when `|L| = 2`) by a nontrivial root.
    pub corrupt_beta: bool,
}

pub fn run(input: &FrobeniusInput) -> Result<FrobeniusReport> {
    let FrobeniusInput {
        pg,
        act,
        table,
        h,
        ta,
        idem,
        seed,
        corrupt_beta,
    } = *input;
    let p = pg.p;
    let f = ta.field();
    let alpha = h.cocycle();
    let aut = verify_autfrob(alpha, p)?;
    let l = h.base();
    let phi1 = LAutomorphism::power(l, p as i64)?;
    let single = alpha.twist(&phi1).form() == alpha.frobenius_twist(p)?.form();
    let (tau, tau_search) = solve_tau(pg, act, seed)?;
    let intertwining = intertwines(pg, act, &tau);
    let perm = build_phi(pg, table, &tau);
    let automorphism = perm.is_ok();
    let perm = perm?;
    let mut beta = frobenius_coboundary(alpha, p)?;
    let coboundary = true;
    if corrupt_beta && l.rank() > 0 && f.unit_order() > 1 {
        // on L = C₂ every change at one point is a character, which leaves
        // σ multiplicative; there the unit is moved instead
        let at = if l.order() == 2 {
            0
        } else {
            l.index(&l.scale(&l.generator(0), p as i64))
        };
        beta[at] = beta[at]
            .mul(&RootScalar::new(f.unit_order(), 1))
            .normalized();
    }
    let sigma = build_sigma(ta, h, perm, &beta, p)?;
    // multiplicativity on basis pairs, straight from the structure constants
    let n = ta.dim();
    let alg = &ta.alg;
    let mut multiplicative = true;
    let mut first_failure = None;
    let mut pairs = 0usize;
    'pairs: for a in 0..n {
        for b in 0..n {
            pairs += 1;
            let lhs: Vec<(usize, Fe)> = alg
                .basis_product(a, b)
                .iter()
                .map(|&(c, k)| {
                    let c = c as usize;
                    (
                        sigma.perm[c] as usize,
                        f.mul(f.frobenius_power(k, 2), sigma.coeff[c]),
                    )
                })
                .collect();
            let (sa, sb) = (sigma.perm[a] as usize, sigma.perm[b] as usize);
            let s = f.mul(sigma.coeff[a], sigma.coeff[b]);
            let rhs: Vec<(usize, Fe)> = alg
                .basis_product(sa, sb)
                .iter()
                .map(|&(c, k)| (c as usize, f.mul(s, k)))
                .collect();
            if lhs != rhs {
                multiplicative = false;
                first_failure = Some(format!("{} * {}", alg.labels()[a], alg.labels()[b]));
                break 'pairs;
            }
        }
    }
    let mut seen = vec![false; n];
    let bijective = sigma.coeff.iter().all(|c| !c.is_zero())
        && sigma
            .perm
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t as usize], true));
    let scalars: Vec<Fe> = f.elements().take(256).collect();
    let mut semilinear = true;
    for i in (0..n).step_by((n / 64).max(1)) {
        let e = alg.basis_vector(i);
        let se = sigma.apply(ta, &e);
        for &lam in &scalars {
            let lhs = sigma.apply(ta, &linalg::scale(f, lam, &e));
            semilinear &= lhs == linalg::scale(f, f.frobenius_power(lam, 2), &se);
        }
    }
    let preserves_identity = sigma.apply(ta, alg.one()) == alg.one();
    let permutes_idempotents = idem.iter().all(|e| {
        let s = sigma.apply(ta, e);
        idem.contains(&s)
    });
    Ok(FrobeniusReport {
        autfrob: aut.holds,
        single_twist_autfrob: single,
        tau,
        tau_search,
        intertwining,
        automorphism,
        beta,
        coboundary,
        pairs_checked: pairs,
        multiplicative,
        first_failure,
        bijective,
        semilinear,
        preserves_identity,
        permutes_idempotents,
        field: f.name(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::cocycle::AlternatingForm;
    use crate::extension::PhiFamily;
    use crate::field::FieldSpec;
    use crate::pgroup::Component;
    use std::sync::Arc;

    fn report(
        p: u64,
        comps: Vec<(u32, usize)>,
        l: Vec<u64>,
        mats: Vec<Vec<Vec<Vec<i64>>>>,
        form: &[(usize, usize, u64, i64)],
        corrupt: bool,
    ) -> FrobeniusReport {
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
        let table = ActionTable::new(&pg, &act);
        let ta = TwistedAlgebra::build(&table, &h, f).unwrap();
        let idem: Vec<Vec<Fe>> = (0..phis.len()).map(|v| ta.e_phi(&h, &phis, v)).collect();
        run(&FrobeniusInput {
            pg: &pg,
            act: &act,
            table: &table,
            h: &h,
            ta: &ta,
            idem: &idem,
            seed: 0,
            corrupt_beta: corrupt,
        })
        .unwrap()
    }

    #[test]
    fn quantum_plane_twist_is_coefficient_map() {
        let r = report(
            5,
            vec![(1, 2)],
            vec![4, 4],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 2]]],
            ],
            &[(0, 1, 4, 1)],
            false,
        );
        r.check().unwrap();
        assert_eq!(r.tau[0], modmat::identity(2));
        assert!(r.beta.iter().all(|b| b.is_one()));
        assert_eq!(r.pairs_checked, 160_000);
    }

    #[test]
    fn order_three_blocks_over_f4() {
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
        let r = report(
            2,
            vec![(1, 4)],
            vec![3, 3],
            vec![vec![a], vec![b]],
            &[(0, 1, 3, 1)],
            false,
        );
        r.check().unwrap();
        assert_ne!(r.tau[0], modmat::identity(4));
        // τ is block diagonal
        for i in 0..4 {
            for k in 0..4 {
                if i / 2 != k / 2 {
                    assert_eq!(r.tau[0][i][k], 0);
                }
            }
        }
    }

    #[test]
    fn order_eight_matrix_over_f3() {
        // [[0, 1], [1, 1]] has order 8 in GL_2(F_3)
        let r = report(
            3,
            vec![(1, 2)],
            vec![8],
            vec![vec![vec![vec![0, 1], vec![1, 1]]]],
            &[],
            false,
        );
        r.check().unwrap();
        assert_eq!(r.field, "F_3^2");
    }

    #[test]
    fn higher_exponent_intertwiner() {
        // C_9 with L = C_2 and C_27^2 with a diagonal C_2
        let r = report(
            3,
            vec![(2, 1)],
            vec![2],
            vec![vec![vec![vec![8]]]],
            &[],
            false,
        );
        r.check().unwrap();
        let r = report(
            2,
            vec![(2, 2)],
            vec![3],
            vec![vec![vec![vec![0, 3], vec![1, 3]]]],
            &[],
            false,
        );
        r.check().unwrap();
    }

    #[test]
    fn corrupt_beta_breaks_multiplicativity() {
        let r = report(
            5,
            vec![(1, 2)],
            vec![4, 4],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 2]]],
            ],
            &[(0, 1, 4, 1)],
            true,
        );
        assert!(matches!(r.check(), Err(Error::MultiplicativityFails(_))));
    }
}
