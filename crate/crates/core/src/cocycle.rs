//! Alternating forms on `Λ²L` and the standard 2-cocycles representing them.

use serde::{Deserialize, Serialize};

use crate::abelian::{AbElement, FinAbGroup, Subgroup};
use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::scalar::RootScalar;

/// An alternating bimultiplicative form given by its values
/// `t[j][l] = τ(a_j ∧ a_l)` on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingForm {
    l: FinAbGroup,
    t: Vec<Vec<RootScalar>>,
}

impl AlternatingForm {
    pub fn trivial(l: &FinAbGroup) -> Self {
        let s = l.rank();
        AlternatingForm {
            l: l.clone(),
            t: vec![vec![RootScalar::one(); s]; s],
        }
    }

    /// Build from values on pairs `j < l` (0-based); unlisted pairs are 1.
    pub fn new(l: &FinAbGroup, entries: &[(usize, usize, RootScalar)]) -> Result<Self> {
        let mut f = Self::trivial(l);
        for &(j, k, v) in entries {
            if j >= l.rank() || k >= l.rank() || j == k {
                return Err(Error::BadForm(format!(
                    "invalid generator pair ({}, {})",
                    j + 1,
                    k + 1
                )));
            }
            let bound = gcd(l.orders()[j], l.orders()[k]);
            if !bound.is_multiple_of(v.exact_order()) {
                return Err(Error::BadFormOrder {
                    i: j.min(k) + 1,
                    j: j.max(k) + 1,
                    order: v.exact_order(),
                    bound,
                });
            }
            let v = if j < k { v } else { v.inv() };
            let (j, k) = (j.min(k), j.max(k));
            f.t[j][k] = v.normalized();
            f.t[k][j] = v.inv().normalized();
        }
        Ok(f)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.l
    }

    pub fn value(&self, j: usize, l: usize) -> RootScalar {
        self.t[j][l]
    }

    /// Values on pairs `j < l`, in pair order.
    pub fn pair_values(&self) -> Vec<(usize, usize, RootScalar)> {
        let s = self.l.rank();
        let mut out = Vec::new();
        for j in 0..s {
            for l in j + 1..s {
                out.push((j, l, self.t[j][l]));
            }
        }
        out
    }

    /// `τ(x ∧ y) = ∏ t_{jl}^{x_j y_l}`.
    pub fn eval(&self, x: &AbElement, y: &AbElement) -> RootScalar {
        let mut acc = RootScalar::one();
        for (j, &xj) in x.0.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (l, &yl) in y.0.iter().enumerate() {
                if yl != 0 && !self.t[j][l].is_one() {
                    acc = acc.mul(&self.t[j][l].pow((xj * yl) as i64));
                }
            }
        }
        acc.normalized()
    }

    /// Exponent of the group of values.
    pub fn value_exponent(&self) -> u64 {
        self.t
            .iter()
            .flatten()
            .fold(1, |a, v| lcm(a, v.exact_order()))
    }

    pub fn is_trivial(&self) -> bool {
        self.t.iter().flatten().all(|v| v.is_one())
    }

    /// `{x : τ(x ∧ y) = 1 for all y}`.
    pub fn radical(&self) -> Subgroup {
        let m = self.value_exponent();
        let s = self.l.rank();
        let rows: Vec<Vec<i64>> = (0..s)
            .map(|l| {
                (0..s)
                    .map(|j| self.t[j][l].exponent_in(m).unwrap() as i64)
                    .collect()
            })
            .collect();
        self.l.kernel_of(&rows, &vec![m; s])
    }

    /// `^φτ(x ∧ y) = τ(φ^{-1}x ∧ φ^{-1}y)`.
    pub fn twist(&self, phi: &LAutomorphism) -> AlternatingForm {
        let inv = phi.inverse();
        let s = self.l.rank();
        let mut t = vec![vec![RootScalar::one(); s]; s];
        for (j, row) in t.iter_mut().enumerate() {
            for (l, v) in row.iter_mut().enumerate() {
                *v = self.eval(&inv.images[j], &inv.images[l]);
            }
        }
        AlternatingForm {
            l: self.l.clone(),
            t,
        }
    }

    /// Every value raised to `q^{-1}`.
    pub fn frobenius_twist(&self, q: u64) -> Result<AlternatingForm> {
        let t = self
            .t
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        v.normalized()
                            .frobenius_inverse_power(q)
                            .map(|x| x.normalized())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlternatingForm {
            l: self.l.clone(),
            t,
        })
    }
}

/// An automorphism of `L`, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LAutomorphism {
    l: FinAbGroup,
    pub images: Vec<AbElement>,
}

impl LAutomorphism {
    pub fn new(l: &FinAbGroup, images: Vec<AbElement>) -> Result<Self> {
        if images.len() != l.rank() {
            return Err(Error::NotAnAutomorphism("wrong number of images".into()));
        }
        for (j, x) in images.iter().enumerate() {
            if !l.orders()[j].is_multiple_of(l.element_order(x)) {
                return Err(Error::NotAnAutomorphism(format!(
                    "image of generator {} has order {} not dividing {}",
                    j + 1,
                    l.element_order(x),
                    l.orders()[j]
                )));
            }
        }
        let phi = LAutomorphism {
            l: l.clone(),
            images,
        };
        let mut seen = vec![false; l.order() as usize];
        for x in l.elements() {
            let i = l.index(&phi.apply(&x));
            if seen[i] {
                return Err(Error::NotAnAutomorphism("map is not injective".into()));
            }
            seen[i] = true;
        }
        Ok(phi)
    }

    pub fn identity(l: &FinAbGroup) -> Self {
        LAutomorphism {
            l: l.clone(),
            images: (0..l.rank()).map(|j| l.generator(j)).collect(),
        }
    }

    /// `x ↦ x^k`, for `k` coprime to `|L|`.
    pub fn power(l: &FinAbGroup, k: i64) -> Result<Self> {
        Self::new(
            l,
            (0..l.rank()).map(|j| l.scale(&l.generator(j), k)).collect(),
        )
    }

    pub fn apply(&self, x: &AbElement) -> AbElement {
        let mut acc = self.l.zero();
        for (img, &c) in self.images.iter().zip(&x.0) {
            if c != 0 {
                acc = self.l.add(&acc, &self.l.scale(img, c as i64));
            }
        }
        acc
    }

    pub fn inverse(&self) -> LAutomorphism {
        let mut images = vec![self.l.zero(); self.l.rank()];
        for x in self.l.elements() {
            let y = self.apply(&x);
            let nz: Vec<usize> = (0..y.0.len()).filter(|&i| y.0[i] != 0).collect();
            if nz.len() == 1 && y.0[nz[0]] == 1 {
                images[nz[0]] = x;
            }
        }
        LAutomorphism {
            l: self.l.clone(),
            images,
        }
    }
}

/// A normalized 2-cocycle `α(x, y) = ∏ b_{jl}^{x_j y_l} · γ(x)γ(y)γ(x+y)^{-1}`.
///
/// Each `b_{jl}` has order dividing `gcd(d_j, d_l)`, so the first factor is
/// bimultiplicative on `L`; `γ` is an optional table indexed by the
/// lexicographic position of `x` with `γ(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocycle2 {
    l: FinAbGroup,
    b: Vec<Vec<RootScalar>>,
    gamma: Option<Vec<RootScalar>>,
}

impl Cocycle2 {
    pub fn trivial(l: &FinAbGroup) -> Self {
        let s = l.rank();
        Cocycle2 {
            l: l.clone(),
            b: vec![vec![RootScalar::one(); s]; s],
            gamma: None,
        }
    }

    /// The standard representative `α(x, y) = ∏_{j>l} t_{jl}^{x_j y_l}`.
    pub fn from_form(tau: &AlternatingForm) -> Self {
        let s = tau.l.rank();
        let mut b = vec![vec![RootScalar::one(); s]; s];
        for (j, row) in b.iter_mut().enumerate() {
            for (l, v) in row.iter_mut().enumerate().take(j) {
                *v = tau.t[j][l];
            }
        }
        Cocycle2 {
            l: tau.l.clone(),
            b,
            gamma: None,
        }
    }

    /// Multiply by the coboundary of `gamma` (a table over `L` with
    /// `gamma[0] = 1`).
    pub fn with_coboundary(&self, gamma: Vec<RootScalar>) -> Self {
        assert_eq!(gamma.len(), self.l.order() as usize);
        assert!(gamma[0].is_one(), "modifier must be normalized");
        let gamma = match &self.gamma {
            None => gamma,
            Some(g) => g
                .iter()
                .zip(&gamma)
                .map(|(a, b)| a.mul(b).normalized())
                .collect(),
        };
        Cocycle2 {
            gamma: Some(gamma),
            ..self.clone()
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.l
    }

    pub fn bilinear(&self) -> &[Vec<RootScalar>] {
        &self.b
    }

    pub fn modifier(&self) -> Option<&[RootScalar]> {
        self.gamma.as_deref()
    }

    pub fn eval(&self, x: &AbElement, y: &AbElement) -> RootScalar {
        let mut acc = RootScalar::one();
        for (j, &xj) in x.0.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (l, &yl) in y.0.iter().enumerate() {
                if yl != 0 && !self.b[j][l].is_one() {
                    acc = acc.mul(&self.b[j][l].pow((xj * yl) as i64));
                }
            }
        }
        if let Some(g) = &self.gamma {
            let l = &self.l;
            let gx = g[l.index(x)];
            let gy = g[l.index(y)];
            let gxy = g[l.index(&l.add(x, y))];
            acc = acc.mul(&gx).mul(&gy).div(&gxy);
        }
        acc.normalized()
    }

    /// `x ∧ y ↦ α(x, y) α(y, x)^{-1}` on generator pairs.
    pub fn form(&self) -> AlternatingForm {
        let s = self.l.rank();
        let mut t = vec![vec![RootScalar::one(); s]; s];
        for (j, row) in t.iter_mut().enumerate() {
            for (l, v) in row.iter_mut().enumerate() {
                let (a, b) = (self.l.generator(j), self.l.generator(l));
                *v = self.eval(&a, &b).div(&self.eval(&b, &a)).normalized();
            }
        }
        AlternatingForm {
            l: self.l.clone(),
            t,
        }
    }

    /// `^φα(x, y) = α(φ^{-1}x, φ^{-1}y)`.
    pub fn twist(&self, phi: &LAutomorphism) -> Self {
        let inv = phi.inverse();
        let s = self.l.rank();
        let mut b = vec![vec![RootScalar::one(); s]; s];
        for (k, row) in b.iter_mut().enumerate() {
            for (m, v) in row.iter_mut().enumerate() {
                let (x, y) = (&inv.images[k], &inv.images[m]);
                let mut acc = RootScalar::one();
                for (j, &xj) in x.0.iter().enumerate() {
                    for (l, &yl) in y.0.iter().enumerate() {
                        acc = acc.mul(&self.b[j][l].pow((xj * yl) as i64));
                    }
                }
                *v = acc.normalized();
            }
        }
        let gamma = self.gamma.as_ref().map(|g| {
            self.l
                .elements()
                .map(|x| g[self.l.index(&inv.apply(&x))])
                .collect()
        });
        Cocycle2 {
            l: self.l.clone(),
            b,
            gamma,
        }
    }

    /// `α^{(q)}`: every value raised to `q^{-1}` modulo its order.
    pub fn frobenius_twist(&self, q: u64) -> Result<Self> {
        let f = |v: &RootScalar| {
            v.normalized()
                .frobenius_inverse_power(q)
                .map(|x| x.normalized())
        };
        let b = self
            .b
            .iter()
            .map(|r| r.iter().map(f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let gamma = match &self.gamma {
            None => None,
            Some(g) => Some(g.iter().map(f).collect::<Result<Vec<_>>>()?),
        };
        Ok(Cocycle2 {
            l: self.l.clone(),
            b,
            gamma,
        })
    }

    /// Least common multiple of the orders of all values.
    pub fn value_exponent(&self) -> u64 {
        let mut n = self
            .b
            .iter()
            .flatten()
            .fold(1, |a, v| lcm(a, v.exact_order()));
        if let Some(g) = &self.gamma {
            n = g.iter().fold(n, |a, v| lcm(a, v.exact_order()));
        }
        n
    }

    /// Checks `α(x,y)α(x+y,z) = α(y,z)α(x,y+z)` on the given triples.
    pub fn check_identity<'a>(
        &self,
        triples: impl IntoIterator<Item = (&'a AbElement, &'a AbElement, &'a AbElement)>,
    ) -> bool {
        let l = &self.l;
        triples.into_iter().all(|(x, y, z)| {
            self.eval(x, y).mul(&self.eval(&l.add(x, y), z))
                == self.eval(y, z).mul(&self.eval(x, &l.add(y, z)))
        })
    }
}

/// Result of comparing `^φα` and `α^{(p²)}` for `φ(x) = x^p`.
#[derive(Clone, Debug, Serialize)]
pub struct AutFrobWitness {
    pub holds: bool,
    pub twisted: AlternatingForm,
    pub frobenius: AlternatingForm,
}

pub fn verify_autfrob(alpha: &Cocycle2, p: u64) -> Result<AutFrobWitness> {
    let l = alpha.group();
    let phi = LAutomorphism::power(l, p as i64)?;
    let twisted = alpha.twist(&phi).form();
    let frobenius = alpha.frobenius_twist(p * p)?.form();
    Ok(AutFrobWitness {
        holds: twisted == frobenius,
        twisted,
        frobenius,
    })
}

/// `β` with `β(x)β(y)β(x+y)^{-1} = α₁(x,y) α₂(x,y)^{-1}`, as a table over `L`.
///
/// The quotient `δ = α₁/α₂` is a symmetric cocycle exactly when the forms
/// agree. It then defines an abelian extension `E` of `L`, which splits; a
/// splitting `s(x) = (σ(x), x)` is assembled from `d_j`-th roots on the
/// generators, and `β = σ^{-1}`.
pub fn solve_coboundary(a1: &Cocycle2, a2: &Cocycle2) -> Result<Vec<RootScalar>> {
    let l = a1.group();
    if a1.form() != a2.form() {
        return Err(Error::NotCohomologous(
            "the alternating forms differ".into(),
        ));
    }
    let n = l.order() as usize;
    let elems: Vec<AbElement> = l.elements().collect();
    let delta = |x: &AbElement, y: &AbElement| a1.eval(x, y).div(&a2.eval(x, y));
    if !delta(&elems[0], &elems[0]).is_one() {
        return Err(Error::NotCohomologous("cocycles are not normalized".into()));
    }
    // E-multiplication on the scalar coordinate
    let mult = |(c1, x): (RootScalar, AbElement), (c2, y): (RootScalar, AbElement)| {
        (c1.mul(&c2).mul(&delta(&x, &y)).normalized(), l.add(&x, &y))
    };
    let mut lifts = Vec::with_capacity(l.rank());
    for j in 0..l.rank() {
        let d = l.orders()[j];
        let a = (RootScalar::one(), l.generator(j));
        let mut acc = (RootScalar::one(), l.zero());
        for _ in 0..d {
            acc = mult(acc, a.clone());
        }
        debug_assert!(l.is_zero(&acc.1));
        let lambda = acc.0.normalized().root(d);
        lifts.push((lambda.inv(), l.generator(j)));
    }
    let mut beta = vec![RootScalar::one(); n];
    for (idx, x) in elems.iter().enumerate() {
        let mut acc = (RootScalar::one(), l.zero());
        for (j, &c) in x.0.iter().enumerate() {
            for _ in 0..c {
                acc = mult(acc, lifts[j].clone());
            }
        }
        beta[idx] = acc.0.inv().normalized();
    }
    for x in &elems {
        for y in &elems {
            let db = beta[l.index(x)]
                .mul(&beta[l.index(y)])
                .div(&beta[l.index(&l.add(x, y))]);
            if db != delta(x, y) {
                return Err(Error::NotCohomologous(format!(
                    "no splitting at ({:?}, {:?})",
                    x.0, y.0
                )));
            }
        }
    }
    Ok(beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn c(n: u64, e: i64) -> RootScalar {
        RootScalar::new(n, e)
    }

    fn all_triples(l: &FinAbGroup) -> Vec<(AbElement, AbElement, AbElement)> {
        let e: Vec<AbElement> = l.elements().collect();
        let mut out = Vec::new();
        for x in &e {
            for y in &e {
                for z in &e {
                    out.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn standard_cocycle_on_c4_squared() {
        let l = FinAbGroup::new(vec![4, 4]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(4, 1))]).unwrap();
        let a = Cocycle2::from_form(&tau);
        for x in l.elements() {
            for y in l.elements() {
                // expanded defining product: t_21^{x_2 y_1} with t_21 = ζ4^{-1}
                let expect = c(4, -((x.0[1] * y.0[0]) as i64));
                assert_eq!(a.eval(&x, &y), expect);
            }
        }
        let t = all_triples(&l);
        assert!(a.check_identity(t.iter().map(|(x, y, z)| (x, y, z))));
        assert_eq!(a.form(), tau);
    }

    #[test]
    fn standard_cocycle_on_c3_squared() {
        let l = FinAbGroup::new(vec![3, 3]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(3, 1))]).unwrap();
        let a = Cocycle2::from_form(&tau);
        let t = all_triples(&l);
        assert!(a.check_identity(t.iter().map(|(x, y, z)| (x, y, z))));
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(3 % a.eval(&x, &y).exact_order(), 0);
            }
        }
        assert!(Cocycle2::trivial(&l).form().is_trivial());
        assert!(Cocycle2::from_form(&AlternatingForm::trivial(&l))
            .check_identity(t.iter().map(|(x, y, z)| (x, y, z))));
    }

    #[test]
    fn bad_form_order() {
        let l = FinAbGroup::new(vec![4, 4]);
        assert!(matches!(
            AlternatingForm::new(&l, &[(0, 1, c(8, 1))]),
            Err(Error::BadFormOrder {
                order: 8,
                bound: 4,
                ..
            })
        ));
    }

    #[test]
    fn twist_examples() {
        let l = FinAbGroup::new(vec![3, 3]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(3, 1))]).unwrap();
        let a = Cocycle2::from_form(&tau);
        let sq = LAutomorphism::power(&l, 2).unwrap();
        // τ(a^2 ∧ b^2) = τ(a ∧ b)^4; the twist uses φ^{-1} = φ here
        assert_eq!(a.twist(&sq).form().value(0, 1), c(3, 4));
        assert_eq!(a.twist(&LAutomorphism::identity(&l)), a);
        let inv = LAutomorphism::power(&l, -1).unwrap();
        assert_eq!(a.twist(&inv).form(), tau);
        assert!(LAutomorphism::new(&l, vec![l.generator(0), l.generator(0)]).is_err());
    }

    #[test]
    fn frobenius_twist_examples() {
        let l = FinAbGroup::new(vec![3, 3]);
        let a = Cocycle2::from_form(&AlternatingForm::new(&l, &[(0, 1, c(3, 1))]).unwrap());
        assert_eq!(a.frobenius_twist(4).unwrap(), a);
        let l8 = FinAbGroup::new(vec![8, 8]);
        let a8 = Cocycle2::from_form(&AlternatingForm::new(&l8, &[(0, 1, c(8, 3))]).unwrap());
        assert_eq!(a8.frobenius_twist(9).unwrap(), a8);
        assert_eq!(a8.frobenius_twist(3).unwrap().form().value(0, 1), c(8, 1));
        assert!(matches!(
            a8.frobenius_twist(2),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn autfrob_examples() {
        let l = FinAbGroup::new(vec![4, 4]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(4, 1))]).unwrap();
        let w = verify_autfrob(&Cocycle2::from_form(&tau), 5).unwrap();
        assert!(w.holds);
        assert_eq!(w.twisted, tau);
        let l = FinAbGroup::new(vec![3, 3]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(3, 1))]).unwrap();
        let w = verify_autfrob(&Cocycle2::from_form(&tau), 2).unwrap();
        assert!(w.holds && w.frobenius == tau);
        assert!(verify_autfrob(&Cocycle2::trivial(&l), 7).unwrap().holds);
    }

    fn random_form(rng: &mut impl Rng, l: &FinAbGroup) -> AlternatingForm {
        let mut entries = Vec::new();
        for j in 0..l.rank() {
            for k in j + 1..l.rank() {
                let g = gcd(l.orders()[j], l.orders()[k]);
                entries.push((j, k, c(g, rng.gen_range(0..g as i64))));
            }
        }
        AlternatingForm::new(l, &entries).unwrap()
    }

    fn random_gamma(rng: &mut impl Rng, l: &FinAbGroup, n: u64) -> Vec<RootScalar> {
        let mut g: Vec<RootScalar> = (0..l.order())
            .map(|_| c(n, rng.gen_range(0..n as i64)))
            .collect();
        g[0] = RootScalar::one();
        g
    }

    #[test]
    fn coboundary_examples() {
        let l = FinAbGroup::new(vec![4, 2]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(2, 1))]).unwrap();
        let a = Cocycle2::from_form(&tau);
        assert!(solve_coboundary(&a, &a).unwrap().iter().all(|b| b.is_one()));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let gamma = random_gamma(&mut rng, &l, 12);
        let a2 = a.with_coboundary(gamma.clone());
        let beta = solve_coboundary(&a2, &a).unwrap();
        for x in l.elements() {
            for y in l.elements() {
                let db = beta[l.index(&x)]
                    .mul(&beta[l.index(&y)])
                    .div(&beta[l.index(&l.add(&x, &y))]);
                let dg = gamma[l.index(&x)]
                    .mul(&gamma[l.index(&y)])
                    .div(&gamma[l.index(&l.add(&x, &y))]);
                assert_eq!(db, dg);
            }
        }
        let other = Cocycle2::trivial(&l);
        assert!(matches!(
            solve_coboundary(&a, &other),
            Err(Error::NotCohomologous(_))
        ));
    }

    #[test]
    fn randomized_cocycle_properties() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let shapes = [
            vec![4, 4],
            vec![2, 2, 2],
            vec![3, 3],
            vec![2, 4, 4],
            vec![6, 6],
            vec![3, 3, 3],
            vec![8, 8],
            vec![2, 6],
            vec![4, 4, 2],
        ];
        for (p, shape) in [2u64, 3, 5]
            .iter()
            .flat_map(|p| shapes.iter().map(move |s| (*p, s)))
        {
            let l = FinAbGroup::new(shape.clone());
            if gcd(l.order(), p) != 1 {
                continue;
            }
            let tau = random_form(&mut rng, &l);
            let a = Cocycle2::from_form(&tau);
            assert_eq!(a.form(), tau);
            let g = random_gamma(&mut rng, &l, l.exponent());
            let ag = a.with_coboundary(g);
            assert_eq!(ag.form(), tau);
            let elems: Vec<AbElement> = l.elements().collect();
            if l.order() <= 16 {
                let t = all_triples(&l);
                assert!(ag.check_identity(t.iter().map(|(x, y, z)| (x, y, z))));
            } else {
                let t: Vec<_> = (0..10_000)
                    .map(|_| {
                        let mut pick = || elems[rng.gen_range(0..elems.len())].clone();
                        (pick(), pick(), pick())
                    })
                    .collect();
                assert!(ag.check_identity(t.iter().map(|(x, y, z)| (x, y, z))));
            }
            // twists commute with taking forms
            let phi = LAutomorphism::power(&l, p as i64).unwrap();
            assert_eq!(ag.twist(&phi).form(), tau.twist(&phi));
            let q = p * p;
            assert_eq!(
                ag.frobenius_twist(q).unwrap().form(),
                tau.frobenius_twist(q).unwrap()
            );
            let w = verify_autfrob(&ag, p).unwrap();
            assert!(w.holds);
            let beta = solve_coboundary(&ag.twist(&phi), &ag.frobenius_twist(q).unwrap());
            assert!(beta.is_ok());
        }
    }

    #[test]
    fn radical_matches_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for shape in [
            vec![4, 2],
            vec![4, 4],
            vec![2, 2, 2],
            vec![6, 6, 3],
            vec![3, 3, 3, 3],
        ] {
            let l = FinAbGroup::new(shape);
            for _ in 0..5 {
                let tau = random_form(&mut rng, &l);
                let rad = tau.radical();
                let brute = l
                    .elements()
                    .filter(|x| l.elements().all(|y| tau.eval(x, &y).is_one()))
                    .count();
                assert_eq!(rad.order() as usize, brute);
            }
        }
        let l = FinAbGroup::new(vec![4, 2]);
        let tau = AlternatingForm::new(&l, &[(0, 1, c(2, 1))]).unwrap();
        assert_eq!(tau.radical().order(), 2);
    }
}
